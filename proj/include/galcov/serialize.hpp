#pragma once

#include <filesystem>
#include <string>

#include "galcov/catalog.hpp"

namespace galcov {

// JSON text in the shipped data formats. Readers throw StructuralError on
// malformed input.

std::string arrangement_to_json(const Arrangement& a);
Arrangement arrangement_from_json(const std::string& text);

/// Passages are written "a" (above) or "b" (below).
std::string factorization_to_json(const Factorization& f);
Factorization factorization_from_json(const std::string& text);

/// Relators as strings of the word grammar; projective is null when absent.
std::string presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const std::string& text);

/// Rows of a closed table, one array per coset, columns g1, g1^-1, g2, ...
std::string coset_table_to_json(const CosetTable& t);

std::string case_result_to_json(const CaseResult& r);

Verdict parse_verdict(const std::string& s);

/// Directory name of a case: the id, or id_n for the parametric family.
std::string case_dir_name(const std::string& id, int n);

/// Writes arrangement.json, factorization.json (unless absent),
/// presentation.json and case.json under root/cases/<dir>.
void write_case(const CaseRecord& rec, const std::filesystem::path& root);
CaseRecord read_case(const std::filesystem::path& dir);

/// Every case, the parametric family for n = 1..4.
void export_cases(const std::filesystem::path& root);

}  // namespace galcov
