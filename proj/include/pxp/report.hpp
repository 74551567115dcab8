#ifndef PXP_REPORT_HPP
#define PXP_REPORT_HPP

#include <iomanip>
#include <sstream>
#include <string>

#include <json.hpp>

#include "pxp/compare.hpp"
#include "pxp/hilbert.hpp"

namespace pxp {

using nlohmann::json;

inline json to_json(Bidegree d) { return json{d.x, d.y}; }

inline Bidegree bidegree_from_json(const json& j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

inline json to_json(const ComparisonReport& r) {
    json j;
    j["partition"] = r.partition.str();
    j["m"] = r.m;
    j["verdict"] = verdict_name(r.verdict);
    j["field"] = r.field;
    j["order"] = "degrevlex";
    if (r.witness) {
        j["witness"] = *r.witness;
        j["witness-bidegree"] = to_json(*r.witness_bidegree);
        j["witness-dim-symbolic"] = r.witness_dim_symbolic;
        j["witness-dim-ordinary"] = r.witness_dim_ordinary;
        j["witness-membership-only"] = r.witness_membership_only;
    } else {
        j["witness"] = nullptr;
        j["witness-bidegree"] = nullptr;
    }
    j["wall-time-ms"] = r.millis;
    return j;
}

inline ComparisonReport comparison_from_json(const json& j) {
    ComparisonReport r;
    std::string parts = j.at("partition").get<std::string>();
    if (!parts.empty()) r.partition = Partition::parse(parts);
    r.m = j.at("m").get<int>();
    r.verdict = j.at("verdict").get<std::string>() == "equal" ? Verdict::Equal : Verdict::NotEqual;
    r.field = j.value("field", "");
    if (!j.at("witness").is_null()) {
        r.witness = j.at("witness").get<std::string>();
        r.witness_bidegree = bidegree_from_json(j.at("witness-bidegree"));
        r.witness_dim_symbolic = j.value("witness-dim-symbolic", 0);
        r.witness_dim_ordinary = j.value("witness-dim-ordinary", 0);
        r.witness_membership_only = j.value("witness-membership-only", false);
    }
    r.millis = j.value("wall-time-ms", 0.0);
    return r;
}

inline json to_json(const SweepRow& row) {
    json j;
    j["partition"] = row.partition.str();
    j["distinct-part-count"] = row.distinct_parts;
    j["verdict"] = verdict_name(row.verdict);
    j["witness-bidegree"] = row.witness_bidegree ? to_json(*row.witness_bidegree) : json(nullptr);
    j["conjecture-prediction"] = row.predicted_equal ? "equal" : "not-equal";
    j["agreement"] = row.agrees;
    j["wall-time-ms"] = row.millis;
    return j;
}

inline json to_json(const SweepReport& r) {
    json j;
    j["max-points"] = r.max_points;
    j["m"] = r.m;
    j["field"] = r.field;
    j["order"] = r.order;
    json rows = json::array();
    for (const auto& row : r.rows) rows.push_back(to_json(row));
    j["rows"] = std::move(rows);
    return j;
}

inline SweepReport sweep_from_json(const json& j) {
    SweepReport r;
    r.max_points = j.at("max-points").get<int>();
    r.m = j.at("m").get<int>();
    r.field = j.value("field", "");
    r.order = j.value("order", "degrevlex");
    for (const auto& jr : j.at("rows")) {
        SweepRow row;
        row.partition = Partition::parse(jr.at("partition").get<std::string>());
        row.distinct_parts = jr.at("distinct-part-count").get<int>();
        row.verdict =
            jr.at("verdict").get<std::string>() == "equal" ? Verdict::Equal : Verdict::NotEqual;
        if (!jr.at("witness-bidegree").is_null())
            row.witness_bidegree = bidegree_from_json(jr.at("witness-bidegree"));
        row.predicted_equal = jr.at("conjecture-prediction").get<std::string>() == "equal";
        row.agrees = jr.at("agreement").get<bool>();
        row.millis = jr.value("wall-time-ms", 0.0);
        r.rows.push_back(std::move(row));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Aligned text tables
// ---------------------------------------------------------------------------

inline std::string sweep_table(const SweepReport& r) {
    std::ostringstream os;
    std::size_t wp = 9;
    for (const auto& row : r.rows) wp = std::max(wp, row.partition.str().size());
    os << std::left << std::setw(static_cast<int>(wp) + 2) << "partition" << std::setw(7)
       << "parts" << std::setw(11) << "verdict" << std::setw(11) << "predicted" << std::setw(7)
       << "agree" << std::setw(10) << "witness" << "ms\n";
    for (const auto& row : r.rows) {
        os << std::left << std::setw(static_cast<int>(wp) + 2) << row.partition.str()
           << std::setw(7) << row.distinct_parts << std::setw(11) << verdict_name(row.verdict)
           << std::setw(11) << (row.predicted_equal ? "equal" : "not-equal") << std::setw(7)
           << (row.agrees ? "yes" : "NO") << std::setw(10)
           << (row.witness_bidegree ? row.witness_bidegree->str() : "-") << std::fixed
           << std::setprecision(1) << row.millis << "\n";
    }
    return os.str();
}

inline std::string comparison_table(const ComparisonReport& r) {
    std::ostringstream os;
    os << "partition : " << (r.partition.parts.empty() ? "(non-ACM diagram)" : r.partition.str())
       << "\n";
    os << "m         : " << r.m << "\n";
    os << "field     : " << r.field << "\n";
    os << "verdict   : " << verdict_name(r.verdict) << "\n";
    if (r.witness) {
        os << "witness   : " << *r.witness << "\n";
        os << "bidegree  : " << r.witness_bidegree->str() << "\n";
        os << "dims      : symbolic " << r.witness_dim_symbolic << ", ordinary "
           << r.witness_dim_ordinary << "\n";
        if (r.witness_membership_only)
            os << "note      : verdict rests on basis membership, no table gap\n";
    }
    os << "time      : " << std::fixed << std::setprecision(1) << r.millis << " ms\n";
    return os.str();
}

inline std::string hilbert_table_text(const HilbertTable& t, bool quotient) {
    std::ostringstream os;
    os << (quotient ? "quotient dims" : "ideal dims") << " up to " << t.bound.str() << "\n";
    os << std::setw(4) << " ";
    for (int b = 0; b <= t.bound.y; ++b) os << std::setw(5) << b;
    os << "\n";
    for (int a = 0; a <= t.bound.x; ++a) {
        os << std::setw(4) << a;
        for (int b = 0; b <= t.bound.y; ++b) {
            const auto& cell = t.cells[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            os << std::setw(5) << (quotient ? cell.second : cell.first);
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace pxp

#endif
