#include "galcov/serialize.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace galcov {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw StructuralError(std::string(what) + ": " + e.what());
  }
}

template <typename T>
T field(const json& j, const char* key, const char* what) {
  if (!j.contains(key)) throw StructuralError(std::string(what) + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw StructuralError(std::string(what) + ": field '" + key + "': " + e.what());
  }
}

json arrangement_json(const Arrangement& a) {
  json j;
  j["n"] = a.n();
  j["triangles"] = a.triangles;
  if (!a.coords.empty()) {
    json c = json::object();
    for (const auto& [v, xy] : a.coords) c[std::to_string(v)] = xy;
    j["coords"] = c;
  }
  return j;
}

Arrangement arrangement_of(const json& j) {
  Arrangement a;
  a.triangles = field<std::vector<std::array<int, 3>>>(j, "triangles", "arrangement");
  if (field<int>(j, "n", "arrangement") != a.n())
    throw StructuralError("arrangement: n does not match the number of triangles");
  if (j.contains("coords"))
    for (const auto& [k, v] : j.at("coords").items()) a.coords[std::stoi(k)] = v.get<std::array<std::string, 2>>();
  return a;
}

json factor_json(const Factor& f) {
  json passages = json::array();
  for (Side s : f.core.passages) passages.push_back(s == Side::Above ? "a" : "b");
  json conj = json::array();
  for (const Conjugator& c : f.conj) conj.push_back({{"factor", factor_json(c.factor)}, {"power", c.power}});
  return {{"path", {{"ends", {f.core.from, f.core.to}}, {"passages", passages}}}, {"eps", f.eps}, {"conj", conj}};
}

Factor factor_of(const json& j) {
  Factor f;
  const json& path = j.at("path");
  const auto ends = path.at("ends").get<std::vector<std::string>>();
  if (ends.size() != 2) throw StructuralError("factorization: a path needs two ends");
  f.core.from = ends[0];
  f.core.to = ends[1];
  for (const std::string& s : path.at("passages").get<std::vector<std::string>>()) {
    if (s != "a" && s != "b") throw StructuralError("factorization: passage '" + s + "' is neither a nor b");
    f.core.passages.push_back(s == "a" ? Side::Above : Side::Below);
  }
  f.eps = j.at("eps").get<int>();
  if (j.contains("conj"))
    for (const json& c : j.at("conj")) f.conj.push_back(Conjugator{factor_of(c.at("factor")), c.at("power").get<int>()});
  return f;
}

json factorization_json(const Factorization& f) {
  json factors = json::array();
  for (const Factor& x : f.factors) factors.push_back(factor_json(x));
  return {{"frame", f.frame.labels}, {"factors", factors}};
}

Factorization factorization_of(const json& j) {
  Factorization f;
  try {
    f.frame.labels = j.at("frame").get<std::vector<std::string>>();
    for (const json& x : j.at("factors")) f.factors.push_back(factor_of(x));
  } catch (const json::exception& e) {
    throw StructuralError(std::string("factorization: ") + e.what());
  }
  for (const Factor& x : f.factors) compile_halftwist(x.core, f.frame);
  return f;
}

json presentation_json(const Presentation& p) {
  json rels = json::array();
  for (const Relation& r : p.affine) rels.push_back(r.render(p.gens));
  return {{"gens", p.gens}, {"relators", rels}, {"projective", p.projective ? json(p.projective->render(p.gens)) : json()}};
}

Presentation presentation_of(const json& j) {
  Presentation p;
  p.gens = field<std::vector<std::string>>(j, "gens", "presentation");
  for (const std::string& r : field<std::vector<std::string>>(j, "relators", "presentation"))
    p.affine.push_back(p.parse_relation(r));
  if (j.contains("projective") && !j.at("projective").is_null())
    p.projective = p.parse_relation(j.at("projective").get<std::string>());
  return p;
}

json invariants_json(const AbelianInvariants& a) { return {{"rank", a.rank}, {"torsion", a.torsion}}; }

AbelianInvariants invariants_of(const json& j) {
  return AbelianInvariants{j.at("rank").get<int>(), j.at("torsion").get<std::vector<std::int64_t>>()};
}

json meta_json(const CaseRecord& r) {
  json accept = json::array();
  for (Verdict v : r.expected.accept) accept.push_back(verdict_name(v));
  json expected = {{"accept", accept}, {"claim", r.expected.claim}, {"quote", r.expected.quote}};
  expected["order"] = r.expected.order ? json(*r.expected.order) : json();
  expected["invariants"] = r.expected.invariants ? invariants_json(*r.expected.invariants) : json();
  expected["section"] = r.expected.section ? json{{"index", r.expected.section->index},
                                                  {"invariants", invariants_json(r.expected.section->invariants)}}
                                           : json();
  return {{"id", r.id},
          {"title", r.title},
          {"param", r.param},
          {"status", status_name(r.status)},
          {"notation", r.notation},
          {"paths_reconstructed", r.paths_reconstructed},
          {"line_map", r.line_map},
          {"cross_validate", r.cross_validate},
          {"probes", r.probes},
          {"expected", expected},
          {"notes", r.notes}};
}

void meta_into(const json& j, CaseRecord& r) {
  try {
    r.id = j.at("id").get<std::string>();
    r.title = j.at("title").get<std::string>();
    r.param = j.at("param").get<int>();
    r.status = parse_status(j.at("status").get<std::string>());
    r.notation = j.at("notation").get<std::vector<std::string>>();
    r.paths_reconstructed = j.at("paths_reconstructed").get<bool>();
    r.line_map = j.at("line_map").get<std::vector<std::array<int, 2>>>();
    r.cross_validate = j.at("cross_validate").get<bool>();
    r.probes = j.at("probes").get<std::vector<std::string>>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    const json& e = j.at("expected");
    for (const std::string& v : e.at("accept").get<std::vector<std::string>>()) r.expected.accept.push_back(parse_verdict(v));
    r.expected.claim = e.at("claim").get<std::string>();
    r.expected.quote = e.at("quote").get<std::string>();
    if (!e.at("order").is_null()) r.expected.order = e.at("order").get<std::size_t>();
    if (!e.at("invariants").is_null()) r.expected.invariants = invariants_of(e.at("invariants"));
    if (e.contains("section") && !e.at("section").is_null())
      r.expected.section = SectionClaim{e.at("section").at("index").get<int>(), invariants_of(e.at("section").at("invariants"))};
  } catch (const json::exception& e) {
    throw StructuralError(std::string("case.json: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw StructuralError("cannot read " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& p, const json& j) {
  std::ofstream out(p);
  if (!out) throw StructuralError("cannot write " + p.string());
  out << j.dump(2) << "\n";
}

}  // namespace

std::string arrangement_to_json(const Arrangement& a) { return arrangement_json(a).dump(2); }
Arrangement arrangement_from_json(const std::string& text) {
  try {
    return arrangement_of(parse_json(text, "arrangement"));
  } catch (const json::exception& e) {
    throw StructuralError(std::string("arrangement: ") + e.what());
  }
}

std::string factorization_to_json(const Factorization& f) { return factorization_json(f).dump(2); }
Factorization factorization_from_json(const std::string& text) {
  return factorization_of(parse_json(text, "factorization"));
}

std::string presentation_to_json(const Presentation& p) { return presentation_json(p).dump(2); }
Presentation presentation_from_json(const std::string& text) {
  return presentation_of(parse_json(text, "presentation"));
}

std::string coset_table_to_json(const CosetTable& t) {
  json rows = json::array();
  const std::size_t w = static_cast<std::size_t>(2 * t.ngens);
  for (int c = 0; c < t.cosets; ++c) {
    const auto begin = t.data.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(c) * w);
    rows.push_back(std::vector<std::int32_t>(begin, begin + static_cast<std::ptrdiff_t>(w)));
  }
  return json{{"cosets", t.cosets}, {"closed", t.closed}, {"table", rows}}.dump();
}

std::string case_result_to_json(const CaseResult& r) {
  json j = {{"id", r.id},
            {"param", r.param},
            {"claim", r.claim},
            {"verdict", verdict_name(r.identity.verdict)},
            {"outcome", outcome_name(r.outcome)},
            {"seconds", r.seconds},
            {"certificates", r.certificates}};
  j["order"] = r.identity.order ? json(*r.identity.order) : json();
  j["invariants"] = r.identity.invariants_known ? invariants_json(r.identity.invariants) : json();
  j["error"] = r.error.empty() ? json() : json(r.error);
  j["factorization_degree"] = r.factorization_degree ? json(*r.factorization_degree) : json();
  j["full_degree"] = r.full_degree ? json(*r.full_degree) : json();
  j["full_twist"] = r.full_twist ? json(*r.full_twist) : json();
  j["square_quotient_order"] = r.square_quotient_order ? json(*r.square_quotient_order) : json();
  j["section_found"] = r.section_found ? json(*r.section_found) : json();
  j["kernel_generators"] = r.kernel_generators ? json(*r.kernel_generators) : json();
  if (r.hom) {
    json images = json::array();
    for (const Perm& p : r.hom->images) images.push_back(perm_cycles(p));
    j["hom"] = {{"degree", r.hom->degree}, {"images", images}, {"image_order", r.hom->image_order}};
  }
  json probes = json::array();
  for (const ProbeResult& p : r.probes) probes.push_back({{"relator", p.relator}, {"closed", p.closed}, {"cosets", p.cosets}});
  j["probes"] = probes;
  if (r.cross)
    j["cross_check"] = {{"agree", r.cross->agree},
                        {"assembled", r.cross->assembled.render()},
                        {"displayed", r.cross->displayed.render()}};
  return j.dump(2);
}

std::string Report::render_json() const {
  json out = json::array();
  for (const CaseResult& r : rows) out.push_back(json::parse(case_result_to_json(r)));
  return json{{"cases", out}, {"exit_code", exit_code()}}.dump(2);
}

Verdict parse_verdict(const std::string& s) {
  for (Verdict v : {Verdict::Trivial, Verdict::Finite, Verdict::FreeAbelian, Verdict::ElementaryAbelian2,
                    Verdict::NormallyGenerated, Verdict::InvariantsOnly})
    if (verdict_name(v) == s) return v;
  throw StructuralError("unknown verdict '" + s + "'");
}

std::string case_dir_name(const std::string& id, int n) {
  return is_parametric(id) ? id + "_" + std::to_string(n) : id;
}

void write_case(const CaseRecord& rec, const std::filesystem::path& root) {
  const auto dir = root / "cases" / case_dir_name(rec.id, rec.param);
  std::filesystem::create_directories(dir);
  write_file(dir / "arrangement.json", arrangement_json(rec.arrangement));
  if (rec.status != FactorizationStatus::Absent) write_file(dir / "factorization.json", factorization_json(rec.factorization));
  else std::filesystem::remove(dir / "factorization.json");
  write_file(dir / "presentation.json", presentation_json(rec.displayed));
  write_file(dir / "case.json", meta_json(rec));
}

CaseRecord read_case(const std::filesystem::path& dir) {
  CaseRecord r;
  meta_into(parse_json(read_file(dir / "case.json"), "case.json"), r);
  r.arrangement = arrangement_from_json(read_file(dir / "arrangement.json"));
  if (std::filesystem::exists(dir / "factorization.json"))
    r.factorization = factorization_from_json(read_file(dir / "factorization.json"));
  r.displayed = presentation_from_json(read_file(dir / "presentation.json"));
  return r;
}

void export_cases(const std::filesystem::path& root) {
  for (const std::string& id : case_ids()) {
    if (is_parametric(id)) {
      for (int n = 1; n <= 4; ++n) write_case(builtin_case(id, n), root);
    } else {
      write_case(builtin_case(id), root);
    }
  }
}

CaseRecord load_case(const std::string& id, int n) {
  const char* env = std::getenv("GALCOV_DATA_DIR");
  if (env == nullptr || *env == '\0') return builtin_case(id, n);
  const auto dir = std::filesystem::path(env) / "cases" / case_dir_name(id, n);
  if (!std::filesystem::exists(dir)) throw StructuralError("no case directory " + dir.string());
  return read_case(dir);
}

}  // namespace galcov
