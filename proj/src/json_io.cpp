#include "gssp/json_io.hpp"

#include <fstream>

namespace gssp {

Json bigint_to_json(const BigInt& v) {
    if (fits_int64(v)) return v.convert_to<std::int64_t>();
    return v.str();
}

BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

Json matrix_to_json(const IntMatrix& X) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < X.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < X.dim(); ++j) row.push_back(bigint_to_json(X.at(i, j)));
        entries.push_back(std::move(row));
    }
    return Json{{"n", X.dim()}, {"entries", std::move(entries)}};
}

IntMatrix matrix_from_json(const Json& j) {
    const auto n = j.at("n").get<std::size_t>();
    const Json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != n)
        throw std::invalid_argument("matrix: entries must be an n x n array");
    std::vector<std::vector<BigInt>> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!entries[i].is_array() || entries[i].size() != n)
            throw std::invalid_argument("matrix: entries must be an n x n array");
        rows[i].reserve(n);
        for (std::size_t c = 0; c < n; ++c) rows[i].push_back(bigint_from_json(entries[i][c]));
    }
    return IntMatrix(std::move(rows));
}

Json zoe_to_json(const ZoeInstance& zoe) {
    Json a = Json::array();
    for (const auto& row : zoe.A) a.push_back(row);
    return Json{{"k", zoe.k}, {"A", std::move(a)}};
}

ZoeInstance zoe_from_json(const Json& j) {
    const auto k = j.at("k").get<std::size_t>();
    const Json& a = j.at("A");
    if (!a.is_array()) throw std::invalid_argument("zoe: A must be an array of rows");
    std::vector<std::vector<int>> rows;
    rows.reserve(a.size());
    for (const auto& row : a) rows.push_back(row.get<std::vector<int>>());
    return ZoeInstance(k, std::move(rows));
}

Json ssp_to_json(const SspInstance& inst) {
    Json items = Json::array();
    for (const auto& w : inst.items) items.push_back(w.to_string(inst.group.alphabet()));
    Json group{{"n", inst.group.n()}, {"X", matrix_to_json(inst.group.X()).at("entries")}};
    return Json{{"group", std::move(group)},
                {"items", std::move(items)},
                {"target", inst.target.to_string(inst.group.alphabet())}};
}

SspInstance ssp_from_json(const Json& j) {
    const Json& g = j.at("group");
    const Json mat{{"n", g.at("n")}, {"entries", g.at("X")}};
    FGroup group(matrix_from_json(mat));
    std::vector<Word> items;
    for (const auto& s : j.at("items"))
        items.push_back(Word::parse(group.alphabet(), s.get<std::string>()));
    Word target = Word::parse(group.alphabet(), j.at("target").get<std::string>());
    return SspInstance{std::move(group), std::move(items), std::move(target)};
}

Json solve_result_to_json(const SolveResult& res) {
    Json out{{"positive", res.positive}};
    if (res.witness) out["witness"] = *res.witness;
    out["stats"] = Json{{"nodes", res.stats.nodes}, {"wall_ms", res.stats.wall_ms}};
    return out;
}

Json plan_to_json(const DistortionPlan& plan) {
    Json witnesses = Json::array();
    for (const auto& w : plan.witnesses) witnesses.push_back(w.to_string(plan.group.alphabet()));
    Json norms = Json::array();
    for (const auto& ns : plan.norm_sq) norms.push_back(bigint_to_json(ns));
    return Json{{"lambda", plan.lambda},     {"indices", plan.indices},
                {"star", plan.star},         {"witnesses", std::move(witnesses)},
                {"norm_sq", std::move(norms)}};
}

Json exponent_vector_to_json(const ExponentVector& ev) {
    Json basis = Json::array();
    for (std::size_t i = 0; i < ev.basis.size(); ++i) basis.push_back(ev.basis.name(i));
    Json alphas = Json::array();
    for (const auto& a : ev.alphas) alphas.push_back(bigint_to_json(a));
    return Json{{"basis", std::move(basis)}, {"alphas", std::move(alphas)}};
}

Json equivalence_report_to_json(const EquivalenceReport& rep) {
    Json out{{"k", rep.k},
             {"zoe_positive", rep.zoe_positive},
             {"ssp_positive", rep.ssp_positive},
             {"verdicts_agree", rep.verdicts_agree}};
    if (rep.zoe_witness) out["zoe_witness"] = *rep.zoe_witness;
    if (rep.ssp_witness) {
        out["ssp_witness"] = *rep.ssp_witness;
        out["coefficients"] = rep.coefficients;
        out["coefficients_all_zero"] = rep.coefficients_all_zero;
    }
    return out;
}

Json spectral_report_to_json(const SpectralReport& rep) {
    Json cp = Json::array();
    for (const auto& c : rep.char_poly) cp.push_back(bigint_to_json(c));
    return Json{{"char_poly", std::move(cp)},
                {"alpha", rep.alpha},
                {"alpha_tol", rep.alpha_tol},
                {"quasi_unipotent", rep.quasi_unipotent}};
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << dump_json(j);
}

}  // namespace gssp
