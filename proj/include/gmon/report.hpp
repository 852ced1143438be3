// Stable, diffable reports for the CLI commands (text and JSON renderings).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gmon/series.hpp"

namespace gmon {

struct Report {
  std::string text;
  std::string json;
  int status = 0;  // 0 success/true, 1 property false, 2 invalid input
};

// FNV-1a, used to abbreviate canonical keys in reports and manifests.
std::uint64_t fnv64(const std::string& s);
std::string key_digest(const std::string& key);

std::string elem_set_to_string(const Monoid& m, Mask s);

// Parses "a,b,c" of names or indices. Throws ValidationError(BadParams).
Mask parse_elem_set(const Monoid& m, const std::string& text);

Report report_validate(const GammaStructure& gs);
Report report_props(const GammaStructure& gs);
Report report_ideals(const GammaStructure& gs);
// Also emits the quotient as an instance file (text format).
Report report_quotient(const GammaStructure& gs, Mask ideal,
                       std::string* quotient_instance = nullptr);
Report report_series(const GammaStructure& gs);
// Intermediate terms of each series; endpoints are implied.
Report report_jh(const GammaStructure& gs, const std::vector<Mask>& mid1,
                 const std::vector<Mask>& mid2);
Report report_demo(const std::string& name);

struct CorpusOptions {
  int max_size = 4;
  bool filter_refinement = false, filter_conical = false,
       filter_cancellative = false;
  std::string action_source = "all-cyclic-subgroups";  // or trivial, full
};
// Writes instance files into out_dir plus a MANIFEST.txt; the report text is
// the manifest contents.
Report corpus_emit(const CorpusOptions& opts, const std::string& out_dir);

}  // namespace gmon
