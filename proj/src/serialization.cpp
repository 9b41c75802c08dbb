#include "rahman/serialization.hpp"

#include "rahman/errors.hpp"

#include <cstdio>
#include <sstream>

namespace rahman {

using nlohmann::json;

nlohmann::json state_list_json(const StateSpace& space)
{
    json list = json::array();
    for (const State& s : space.states()) {
        list.push_back(json::array({s.x, s.y}));
    }
    return list;
}

nlohmann::json matrix_to_json(const Matrix& m)
{
    json entries = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) {
            row.push_back(to_string(m.at(r, c)));
        }
        entries.push_back(std::move(row));
    }
    return json{{"kind", "matrix"}, {"rows", m.rows()}, {"cols", m.cols()},
                {"entries", std::move(entries)}};
}

nlohmann::json matrix_to_json(const Matrix& m, const StateSpace& rows, const StateSpace& cols)
{
    json j = matrix_to_json(m);
    j["row_states"] = state_list_json(rows);
    j["col_states"] = state_list_json(cols);
    return j;
}

Matrix matrix_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
        throw ParseError("not a serialized matrix");
    }
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows) {
        throw ParseError("matrix entry block has the wrong row count");
    }
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const auto& row = entries.at(r);
        if (!row.is_array() || static_cast<int>(row.size()) != cols) {
            throw ParseError("matrix row " + std::to_string(r) + " has the wrong length");
        }
        for (int c = 0; c < cols; ++c) {
            m.at(r, c) = parse_rational(row.at(c).get<std::string>());
        }
    }
    return m;
}

namespace {

std::string format_double(double value, int digits)
{
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*g", digits, value);
    return buffer;
}

} // namespace

std::string matrix_to_csv(const Matrix& m, int float_digits)
{
    std::ostringstream out;
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c > 0) {
                out << ',';
            }
            out << format_double(to_double(m.at(r, c)), float_digits);
        }
        out << '\n';
    }
    return out.str();
}

nlohmann::json to_json(const MappedParams& mp)
{
    return json{{"t", to_string(mp.t)}, {"u", to_string(mp.u)},
                {"v", to_string(mp.v)}, {"w", to_string(mp.w)}};
}

nlohmann::json to_json(const WeightParams& wp)
{
    return json{{"eta1", to_string(wp.eta1)}, {"eta2", to_string(wp.eta2)},
                {"probability_valid", wp.probability_valid}};
}

nlohmann::json to_json(const ChainParams& cp)
{
    return json{{"N", cp.N},
                {"alpha1", to_string(cp.alpha1)}, {"alpha2", to_string(cp.alpha2)},
                {"beta1", to_string(cp.beta1)}, {"beta2", to_string(cp.beta2)}};
}

nlohmann::json to_json(const EigenReport& report)
{
    json entries = json::array();
    for (const EigenEntry& e : report.entries) {
        entries.push_back(json{{"m", e.freq.x}, {"n", e.freq.y},
                               {"lambda", to_string(e.lambda)},
                               {"exact", e.exact},
                               {"max_residual", to_string(e.max_residual)}});
    }
    json collisions = json::array();
    for (const auto& [a, b] : report.lambda_collisions) {
        collisions.push_back(json::array({a, b}));
    }
    return json{{"kind", "eigen_report"}, {"N", report.N}, {"pass", report.pass},
                {"entries", std::move(entries)},
                {"lambdas_distinct", report.lambdas_distinct},
                {"lambda_collisions", std::move(collisions)}};
}

nlohmann::json to_json(const GramReport& report, const StateSpace& space)
{
    json diag = json::array();
    for (const Rational& d : report.diagonal) {
        diag.push_back(to_string(d));
    }
    json violations = json::array();
    for (const auto& [r, c] : report.violations) {
        violations.push_back(json::array({r, c}));
    }
    return json{{"kind", "gram_report"}, {"N", report.N},
                {"pass", report.offdiagonal_zero},
                {"offdiagonal_zero", report.offdiagonal_zero},
                {"diagonal", std::move(diag)},
                {"violations", std::move(violations)},
                {"gram", matrix_to_json(report.gram, space, space)}};
}

nlohmann::json to_json(const StationarityReport& report, const StateSpace& space)
{
    json j{{"kind", "stationarity_report"}, {"N", report.N},
           {"holds", report.holds},
           {"max_deviation", to_string(report.max_deviation)}};
    if (report.witness >= 0) {
        const State s = space.state(report.witness);
        j["witness"] = json{{"index", report.witness}, {"state", json::array({s.x, s.y})}};
    }
    return j;
}

nlohmann::json to_json(const StencilReport& report)
{
    json violations = json::array();
    for (const auto& [r, c] : report.violations) {
        violations.push_back(json::array({r, c}));
    }
    return json{{"conforms", report.conforms},
                {"max_nonzeros_per_row", report.max_nonzeros_per_row},
                {"violations", std::move(violations)}};
}

namespace {

json mismatches_json(const std::vector<EntryMismatch>& mismatches)
{
    json list = json::array();
    for (const EntryMismatch& m : mismatches) {
        list.push_back(json{{"row", m.row}, {"col", m.col},
                            {"expected", to_string(m.expected)},
                            {"computed", to_string(m.computed)}});
    }
    return list;
}

} // namespace

nlohmann::json to_json(const OperatorComparison& cmp)
{
    return json{{"kind", "operator_comparison"}, {"pass", cmp.match},
                {"entries_compared", cmp.entries_compared},
                {"mismatches", mismatches_json(cmp.mismatches)},
                {"computed", matrix_to_json(cmp.computed)},
                {"closed_form", matrix_to_json(cmp.closed_form)}};
}

nlohmann::json to_json(const CommutantComparison& cmp)
{
    return json{{"kind", "commutant_comparison"}, {"pass", cmp.match},
                {"dimension", cmp.dimension}, {"gauge_ok", cmp.gauge_ok},
                {"mismatches", mismatches_json(cmp.mismatches)},
                {"normalized", matrix_to_json(cmp.normalized)},
                {"closed_form", matrix_to_json(cmp.closed_form)}};
}

nlohmann::json to_json(const CommutantBasis& basis)
{
    json matrices = json::array();
    for (const Matrix& m : basis.basis) {
        matrices.push_back(matrix_to_json(m));
    }
    return json{{"kind", "commutant_basis"},
                {"chain_params", to_json(basis.cp)},
                {"dimension", basis.dimension},
                // a local pattern normally yields span{I, M}; more means a
                // degenerate kernel spectrum and is worth flagging
                {"dimension_jump", basis.dimension > 2},
                {"identity_in_span", basis.identity_in_span},
                {"pattern_pairs", basis.pattern.count()},
                {"basis", std::move(matrices)}};
}

nlohmann::json to_json(const SevenPointOperators& ops, const StateSpace& space)
{
    const auto offsets_json = [](const std::vector<std::pair<int, int>>& offsets) {
        json list = json::array();
        for (const auto& [dm, dn] : offsets) {
            list.push_back(json::array({dm, dn}));
        }
        return list;
    };
    return json{{"kind", "seven_point_operators"},
                {"bx", matrix_to_json(ops.bx, space, space)},
                {"by", matrix_to_json(ops.by, space, space)},
                {"bx_report", to_json(ops.x_report)},
                {"by_report", to_json(ops.y_report)},
                {"bx_offsets", offsets_json(ops.x_offsets)},
                {"by_offsets", offsets_json(ops.y_offsets)}};
}

nlohmann::json to_json(const ChiSquareReport& report)
{
    json rows = json::array();
    for (const ChiSquareRow& row : report.rows) {
        rows.push_back(json{{"source", row.source}, {"visits", row.visits},
                            {"sufficient", row.sufficient},
                            {"statistic", row.statistic}, {"dof", row.dof},
                            {"p_value", row.p_value}, {"pass", row.pass}});
    }
    return json{{"kind", "chi_square_report"},
                {"min_visits", report.min_visits},
                {"significance", report.significance},
                {"pass", report.all_pass},
                {"rows", std::move(rows)}};
}

std::string counts_to_csv(const TransitionCounts& tc)
{
    const StateSpace space(tc.N);
    std::ostringstream out;
    out << "source_x,source_y,target_x,target_y,count\n";
    for (int src = 0; src < space.size(); ++src) {
        for (int tgt = 0; tgt < space.size(); ++tgt) {
            if (tc.counts[src][tgt] == 0) {
                continue;
            }
            const State a = space.state(src);
            const State b = space.state(tgt);
            out << a.x << ',' << a.y << ',' << b.x << ',' << b.y << ','
                << tc.counts[src][tgt] << '\n';
        }
    }
    return out.str();
}

nlohmann::json summary_json(const TransitionCounts& tc, const ChainParams& cp,
                            std::uint64_t seed, ChainState s0)
{
    return json{{"kind", "simulation_summary"},
                {"chain_params", to_json(cp)},
                {"steps", tc.steps},
                {"seed", seed},
                {"start", json::array({s0.i1, s0.i2})},
                {"rng", kRngAlgorithm}};
}

} // namespace rahman
