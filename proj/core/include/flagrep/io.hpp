#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "flagrep/characterization.hpp"
#include "flagrep/complex.hpp"
#include "flagrep/multicomplex.hpp"
#include "flagrep/oracle.hpp"
#include "flagrep/shedding.hpp"
#include "flagrep/structure.hpp"
#include "flagrep/tree.hpp"

namespace flagrep {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All writers emit sorted keys, two-space indentation and a trailing newline.
std::string complex_to_json(const ColoredComplex& c);
ColoredComplex complex_from_json(const std::string& text);

std::string multicomplex_to_json(const ColoredMulticomplex& m);
ColoredMulticomplex multicomplex_from_json(const std::string& text);

std::string tree_to_json(const MacaulayTree& t);
MacaulayTree tree_from_json(const std::string& text);
std::string rep_to_json(const GeneralizedRep& r);
GeneralizedRep rep_from_json(const std::string& text);
std::string trees_to_json(const std::vector<MacaulayTree>& ts);

// {"type": a, "entries": [[b, v], ...]}; flag form adds {"flag": {"": f_0, "1": ..., "12": ...}}.
std::string fine_vector_to_json(const FineVector& f, bool with_flag = false);
// Accepts either form; for the flag form the type is 1_d with d taken from `d_hint` or the largest index seen.
FineVector fine_vector_from_json(const std::string& text, std::optional<Tuple> type_hint = std::nullopt);

std::string feasibility_to_json(const Feasibility& r);
std::string certificate_to_json(const DecompositionResult& r);
std::string shedding_to_json(const SheddingTree& s);
std::string cross_report_to_json(const CrossReport& r);

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, const std::string& text);

// FLAGREP_CACHE_DIR, else $XDG_CACHE_HOME/flagrep, else ~/.cache/flagrep.
std::filesystem::path cache_dir();
// achievable_fine_f with results kept as JSON in the cache directory.
std::set<FineVector> cached_achievable_fine_f(const Tuple& a, const Tuple& lambda_max);

}  // namespace flagrep
