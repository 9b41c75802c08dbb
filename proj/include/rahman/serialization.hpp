#pragma once

#include "rahman/bispectral.hpp"
#include "rahman/matrix.hpp"
#include "rahman/params.hpp"
#include "rahman/simulator.hpp"
#include "rahman/spectral.hpp"
#include "rahman/statespace.hpp"

#include <json.hpp>

#include <string>

namespace rahman {

/// All JSON is canonical: object keys sorted, every rational a "num/den"
/// string in lowest terms with positive denominator, state indices
/// accompanied by their (x,y) labels.

nlohmann::json state_list_json(const StateSpace& space);

nlohmann::json matrix_to_json(const Matrix& m);
/// With row/column ordering metadata attached.
nlohmann::json matrix_to_json(const Matrix& m, const StateSpace& rows, const StateSpace& cols);
Matrix matrix_from_json(const nlohmann::json& j);

/// Decimal approximation, one row per line, float_digits significant digits.
std::string matrix_to_csv(const Matrix& m, int float_digits);

nlohmann::json to_json(const MappedParams& mp);
nlohmann::json to_json(const WeightParams& wp);
nlohmann::json to_json(const ChainParams& cp);
nlohmann::json to_json(const EigenReport& report);
nlohmann::json to_json(const GramReport& report, const StateSpace& space);
nlohmann::json to_json(const StationarityReport& report, const StateSpace& space);
nlohmann::json to_json(const StencilReport& report);
nlohmann::json to_json(const OperatorComparison& cmp);
nlohmann::json to_json(const CommutantComparison& cmp);
nlohmann::json to_json(const CommutantBasis& basis);
nlohmann::json to_json(const SevenPointOperators& ops, const StateSpace& space);
nlohmann::json to_json(const ChiSquareReport& report);

/// CSV of observed transitions: one line per (source, target) pair with a
/// nonzero count, states spelled out as coordinates.
std::string counts_to_csv(const TransitionCounts& tc);
nlohmann::json summary_json(const TransitionCounts& tc, const ChainParams& cp,
                            std::uint64_t seed, ChainState s0);

} // namespace rahman
