#pragma once

#include "lefscalc/complex.hpp"
#include "lefscalc/fixed_point.hpp"
#include "lefscalc/flag.hpp"
#include "lefscalc/microlocal.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lefscalc {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "lefscalc/1";

// Scalars: rationals as "p/q"; Gaussians as {"re","im"} on input (a bare
// "p/q" is accepted for real values) and as "p/q" on output when real.
Json to_json(const Rational& r);
Json to_json(const GaussianRational& z);
Json to_json(const RationalMatrix& m);
Rational rational_from_json(const Json& j);
GaussianRational gaussian_from_json(const Json& j);
RationalMatrix matrix_from_json(const Json& j);

Json to_json(const SimplicialComplex& k);
Json to_json(const CellSpace& c);
/// Throws InvalidComplex with every validation diagnostic.
SimplicialComplex complex_from_json(const Json& j);
CellSpace cellspace_from_json(const Json& j);

struct MapBlock {
  int subdivision_level = 0;
  std::map<std::string, std::string> vertex_map;
  /// Absent for self-maps.
  std::optional<SimplicialComplex> target;
  friend bool operator==(const MapBlock&, const MapBlock&) = default;
};

/// One input document. Cell references are labels: "a,b" for simplices,
/// the cell id for cell spaces.
struct ProblemFile {
  std::optional<SimplicialComplex> complex;
  std::optional<CellSpace> cells;
  std::optional<MapBlock> map;
  std::optional<std::map<std::string, GaussianRational>> values;
  std::optional<std::vector<std::string>> support;
  std::optional<std::vector<std::string>> subset;
  std::map<std::string, GaussianRational> traces;
  std::map<int, RationalMatrix> normal_data;
  std::optional<std::map<std::string, Rational>> ell;
  Assumptions assumptions;

  friend bool operator==(const ProblemFile& a, const ProblemFile& b);
};

/// Throws InvalidInput on schema or shape errors.
ProblemFile problem_from_json(const Json& j);
Json to_json(const ProblemFile& p);
/// Reads a file, or a built-in fixture when the path names one.
ProblemFile load_problem(const std::string& path_or_fixture);

// Builders. Each throws InvalidInput when the needed blocks are absent.
Space problem_space(const ProblemFile& p);
CellularSubset subset_of(const ProblemFile& p, const std::vector<std::string>& labels);
/// The "subset" block, or every cell.
CellularSubset problem_subset(const ProblemFile& p);
/// The "values" block, or the constant 1.
ConstructibleFunction problem_function(const ProblemFile& p);
/// The "map" block as a self-map, or the identity when there is none.
SelfMapSpec problem_self_map(const ProblemFile& p);
/// The "map" block with a target complex.
SimplicialMap problem_map(const ProblemFile& p);
TracedProblem problem_traced(const ProblemFile& p);
VertexFunctional problem_functional(const ProblemFile& p);

// Reports.
Json to_json(const LocalizationReport& r);
LocalizationReport localization_report_from_json(const Json& j);

/// Nonzero values in cell order.
struct FunctionReport {
  std::vector<std::pair<std::string, GaussianRational>> values;
  friend bool operator==(const FunctionReport&, const FunctionReport&) = default;
};
FunctionReport function_report(const ConstructibleFunction& phi);
Json to_json(const FunctionReport& r);
FunctionReport function_report_from_json(const Json& j);

struct MorseReport {
  MultiplicityTable table;
  GaussianRational integral;
  bool equal = false;
  friend bool operator==(const MorseReport&, const MorseReport&) = default;
};
Json to_json(const MorseReport& r);
MorseReport morse_report_from_json(const Json& j);

struct IndexComponent {
  int component = 0;
  GaussianRational microlocal_index;
  GaussianRational signed_contribution;
  bool equal = false;
  friend bool operator==(const IndexComponent&, const IndexComponent&) = default;
};

struct IndexCheckReport {
  GaussianRational integral;
  GaussianRational index_sum;
  GaussianRational index_sum_negated;
  std::vector<IndexComponent> components;
  bool equal = false;
  friend bool operator==(const IndexCheckReport&, const IndexCheckReport&) = default;
};
Json to_json(const IndexCheckReport& r);
IndexCheckReport index_check_report_from_json(const Json& j);

struct PushforwardReport {
  FunctionReport function;
  GaussianRational source_integral;
  GaussianRational target_integral;
  bool equal = false;
  friend bool operator==(const PushforwardReport&, const PushforwardReport&) = default;
};
Json to_json(const PushforwardReport& r);
PushforwardReport pushforward_report_from_json(const Json& j);

Json to_json(const Hyperbolicity& h);

// Report builders shared by the command-line tool and the verify suite.
MorseReport morse_report(const ConstructibleFunction& phi, const VertexFunctional& ell);
/// Index sums for ell and -ell against the integral; for simplicial
/// problems also the microlocal index of every fixed component.
IndexCheckReport index_check_report(const ProblemFile& p);
PushforwardReport pushforward_report(const SimplicialMap& g, const ConstructibleFunction& phi);

Json to_json(const IntersectionPattern& p);
IntersectionPattern pattern_from_json(const Json& j);
Json to_json(const FlagReport& r);
FlagReport flag_report_from_json(const Json& j);

}  // namespace lefscalc
