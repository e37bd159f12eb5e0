#include "convterm/format.hpp"

#include <algorithm>
#include <sstream>

namespace convterm {

std::string to_display_string(const WeightEnumerator& w) {
    std::ostringstream os;
    if (w.is_zero()) {
        os << "0";
    } else {
        bool first = true;
        for (const auto& [d, c] : w.coeffs()) {
            if (!first) os << " + ";
            first = false;
            if (d == 0) {
                os << c;
            } else {
                if (c != 1) os << c;
                os << "x";
                if (d != 1) os << "^" << d;
            }
        }
    }
    if (w.is_truncated()) os << " (mod x^" << *w.truncation() + 1 << ")";
    return os.str();
}

std::string to_table(const EnumeratorMatrix& m) {
    const int dim = m.dim();
    std::vector<std::vector<std::string>> cells(dim + 1, std::vector<std::string>(dim + 1));
    cells[0][0] = "s/s'";
    for (int i = 0; i < dim; ++i) {
        cells[0][i + 1] = m.state_labels()[i];
        cells[i + 1][0] = m.state_labels()[i];
        for (int j = 0; j < dim; ++j)
            cells[i + 1][j + 1] = to_display_string(m.at(i, j).without_truncation_flag());
    }
    std::vector<size_t> width(dim + 1, 0);
    for (const auto& row : cells)
        for (int c = 0; c <= dim; ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        for (int c = 0; c <= dim; ++c) {
            if (c) os << " | ";
            os << row[c] << std::string(width[c] - row[c].size(), ' ');
        }
        os << "\n";
    }
    bool truncated = false;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) truncated |= m.at(i, j).is_truncated();
    if (truncated) {
        int dmax = 0;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                if (auto t = m.at(i, j).truncation()) dmax = std::max(dmax, *t);
        os << "(entries mod x^" << dmax + 1 << ")\n";
    }
    return os.str();
}

std::string to_grouped_rows(const Gf2Matrix& m, int group) {
    std::ostringstream os;
    for (int r = 0; r < m.rows(); ++r) os << m.row_string(r, group) << "\n";
    return os.str();
}

std::string to_display_string(const BigRational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

double to_double(const BigRational& q) {
    return q.convert_to<double>();
}

nlohmann::json to_json(const WeightEnumerator& w) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [d, c] : w.coeffs()) terms.push_back({d, c.str()});
    nlohmann::json j;
    j["terms"] = terms;
    j["mod_degree"] = w.is_truncated() ? nlohmann::json(*w.truncation()) : nlohmann::json();
    return j;
}

WeightEnumerator weight_enumerator_from_json(const nlohmann::json& j) {
    std::optional<int> dmax;
    if (j.contains("mod_degree") && !j["mod_degree"].is_null()) dmax = j["mod_degree"].get<int>();
    WeightEnumerator w = WeightEnumerator::zero(dmax);
    for (const auto& term : j.at("terms"))
        w.add_term(term.at(0).get<int>(), BigInt(term.at(1).get<std::string>()));
    return w;
}

nlohmann::json to_json(const EnumeratorMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(row);
    }
    nlohmann::json j;
    j["states"] = m.state_labels();
    j["entries"] = rows;
    return j;
}

nlohmann::json to_json(const Gf2Matrix& m, int group) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row_string(r, group));
    nlohmann::json j;
    j["rows"] = rows;
    j["cols"] = m.cols();
    return j;
}

nlohmann::json to_json(const BlockCodeMatrix& m, int group) {
    nlohmann::json j = to_json(m.gens, group);
    j["kind"] = to_string(m.kind);
    j["N"] = m.N;
    j["n_block"] = m.n_block;
    j["rank"] = m.gens.rank();
    j["source"] = m.source;
    j["dualized"] = m.dualized;
    return j;
}

nlohmann::json to_json(const SpectrumReport& r) {
    nlohmann::json counts = nlohmann::json::array();
    for (const auto& [d, c] : r.counts) counts.push_back({d, c.str()});
    nlohmann::json j;
    j["method"] = to_string(r.method);
    j["counts"] = counts;
    j["divisor"] = r.divisor.str();
    j["dmax"] = r.dmax;
    j["dfree"] = r.dfree ? nlohmann::json(*r.dfree) : nlohmann::json();
    if (r.N > 0) j["N"] = r.N;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

nlohmann::json to_json(const ConvergenceReport& r) {
    nlohmann::json j;
    j["free"] = to_json(r.free);
    nlohmann::json per_n = nlohmann::json::array();
    for (const SpectrumReport& s : r.per_n) per_n.push_back(to_json(s));
    j["per_n"] = per_n;
    nlohmann::json entries = nlohmann::json::array();
    for (const ConvergenceEntry& e : r.entries) {
        nlohmann::json row;
        row["d"] = e.d;
        row["free_count"] = e.free_count.str();
        row["stabilized_at"] = e.stabilized_at ? nlohmann::json(*e.stabilized_at) : nlohmann::json();
        entries.push_back(row);
    }
    j["stabilization"] = entries;
    return j;
}

nlohmann::json to_json(const IdentityReport& r) {
    nlohmann::json j;
    j["lhs"] = to_json(r.lhs);
    j["rhs"] = to_json(r.rhs);
    j["transformed_lhs"] = to_json(r.transformed_lhs);
    j["holds"] = r.holds;
    j["first_discrepant_weight"] =
        r.first_discrepant_weight ? nlohmann::json(*r.first_discrepant_weight) : nlohmann::json();
    return j;
}

nlohmann::json to_json(const PerformanceEstimate& e) {
    nlohmann::json j;
    j["p"] = to_display_string(e.p);
    j["per_unit_event_bound"] = to_display_string(e.per_unit_event_bound);
    j["per_unit_event_bound_approx"] = to_double(e.per_unit_event_bound);
    if (e.horizon_n) {
        j["horizon_n"] = *e.horizon_n;
        j["horizon_bound"] = to_display_string(*e.horizon_bound);
        j["horizon_bound_approx"] = to_double(*e.horizon_bound);
    }
    j["tie_convention"] = e.tie_convention;
    return j;
}

} // namespace convterm
