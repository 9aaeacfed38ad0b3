#pragma once

#include <string>

#include <json.hpp>

#include "treekummer/param_matrix.hpp"
#include "treekummer/sample_matrix.hpp"
#include "treekummer/stat_tests.hpp"
#include "treekummer/tree.hpp"
#include "treekummer/tree_kummer.hpp"

namespace treekummer {

// Key order is preserved so identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

// {"vertices": p, "edges": [[i,j], ...]}
Tree parse_tree_json(const Json& j);
Json tree_to_json(const Tree& t);

// {"tree": {...}, "c_diag": [...], "c_edge": [{"edge":[i,j],"value":v}, ...]}
ParamMatrix parse_params_json(const Json& j);

// params spec plus "a": [...]
TkDistribution parse_tk_json(const Json& j);

// Reads and parses a spec file; parse errors surface as InputError with the
// offending position or field.
Json load_spec_file(const std::string& path);

// FNV-1a over the raw file bytes, hex encoded.
std::string spec_file_hash(const std::string& path);

Json report_to_json(const TestReport& r, std::uint64_t seed);

void write_sample_csv(const SampleMatrix& m, const std::string& path);

}  // namespace treekummer
