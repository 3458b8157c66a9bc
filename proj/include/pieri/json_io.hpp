#pragma once

#include "pieri/worked_example.hpp"
#include "pieri/deform.hpp"
#include "pieri/enumerative.hpp"
#include "pieri/family.hpp"
#include "pieri/report.hpp"
#include "pieri/schubgeom.hpp"
#include "pieri/seqcomb.hpp"
#include "pieri/tableaux.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace pieri::json {

using nlohmann::ordered_json;
using Json = ordered_json;

// Values

inline Json of(const Rat& x) { return to_string(x); }

inline Rat rat_from(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (!j.is_string()) throw Error("json: rational must be a \"p/q\" string");
    return parse_rat(j.get<std::string>());
}

inline Json of(const Vec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(of(x));
    return a;
}

inline Json of_matrix(const std::vector<Vec>& rows) {
    Json a = Json::array();
    for (const auto& r : rows) a.push_back(of(r));
    return a;
}

inline std::vector<Vec> matrix_from(const Json& j) {
    if (!j.is_array()) throw Error("json: matrix must be an array of rows");
    std::vector<Vec> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw Error("json: matrix row must be an array");
        Vec v;
        for (const auto& x : r) v.push_back(rat_from(x));
        if (!rows.empty() && v.size() != rows.front().size()) throw Error("json: ragged matrix");
        rows.push_back(std::move(v));
    }
    return rows;
}

/// {"ambient": n, "dim": d, "basis": reduced echelon rows}
inline Json of(const Subspace& s) {
    return Json{{"ambient", s.ambient()}, {"dim", s.dim()}, {"basis", of_matrix(s.basis())}};
}

/// Accepts the object form above or a bare matrix whose row span is taken.
inline Subspace subspace_from(const Json& j, int n) {
    std::vector<Vec> rows = matrix_from(j.is_object() ? j.at("basis") : j);
    if (j.is_object() && j.at("ambient").get<int>() != n) throw Error("json: subspace ambient dimension mismatch");
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != n) throw Error("json: subspace row length differs from n");
    return Subspace::span(n, std::move(rows));
}

inline Json of(const DecSeq& a) { return a.entries(); }

inline DecSeq seq_from(const Json& j, int n) { return DecSeq(n, j.get<std::vector<int>>()); }

inline Json of(const std::vector<DecSeq>& v) {
    Json a = Json::array();
    for (const auto& s : v) a.push_back(of(s));
    return a;
}

inline Json of(const Partition& p) { return p.parts(); }
inline Partition partition_from(const Json& j) { return Partition(j.get<std::vector<int>>()); }

inline Json of(const Tableau& t) { return t.rows(); }
inline Tableau tableau_from(const Json& j, int m) { return Tableau(j.get<std::vector<std::vector<int>>>(), m); }

/// {exponent string "e1,...,em": "p/q"}
inline Json of(const SparsePoly& p) {
    Json o = Json::object();
    for (const auto& [e, c] : p.terms()) o[exponent_key(e)] = of(c);
    return o;
}

inline SparsePoly sparse_poly_from(const Json& j, int m) {
    SparsePoly p(m);
    for (const auto& [k, v] : j.items()) {
        std::vector<int> e;
        std::size_t pos = 0;
        while (pos <= k.size()) {
            auto next = k.find(',', pos);
            e.push_back(std::stoi(k.substr(pos, next == std::string::npos ? std::string::npos : next - pos)));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        p.add(e, rat_from(v));
    }
    return p;
}

inline Json of(const SchurExpansion& e) {
    Json a = Json::array();
    for (auto it = e.rbegin(); it != e.rend(); ++it) a.push_back(Json{{"shape", of(it->first)}, {"coeff", it->second}});
    return a;
}

/// Coefficient list, lowest degree first.
inline Json of(const Poly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(of(c));
    return a;
}

inline Poly poly_from(const Json& j) {
    std::vector<Rat> c;
    for (const auto& x : j) c.push_back(rat_from(x));
    return Poly(std::move(c));
}

inline Json of(const PolyFamily& fam) {
    Json gens = Json::array();
    for (const auto& g : fam.generators()) {
        Json row = Json::array();
        for (const auto& p : g) row.push_back(of(p));
        gens.push_back(std::move(row));
    }
    return Json{{"ambient", fam.ambient()}, {"generators", std::move(gens)}};
}

inline PolyFamily family_from(const Json& j) {
    std::vector<PolyVec> gens;
    for (const auto& row : j.at("generators")) {
        PolyVec g;
        for (const auto& p : row) g.push_back(poly_from(p));
        gens.push_back(std::move(g));
    }
    return PolyFamily(j.at("ambient").get<int>(), std::move(gens));
}

// Reports

inline Json of(const CheckList& c) {
    Json a = Json::array();
    for (const auto& x : c.items()) {
        Json o{{"clause", x.clause}, {"ok", x.ok}};
        if (!x.detail.empty()) o["detail"] = x.detail;
        a.push_back(std::move(o));
    }
    return a;
}

inline Json of(const Classification& c) {
    Json rows = Json::array();
    for (const auto& r : c.rows)
        rows.push_back(Json{{"j", r.j}, {"alpha_j", r.alpha_j}, {"dim", r.dim}, {"critical", r.critical}, {"expected", r.expected}});
    return Json{{"verdict", verdict_name(c.verdict)}, {"rows", std::move(rows)}, {"equality", c.equality}};
}

inline Json of(const PieriTree& t) {
    Json edges = Json::array();
    for (const auto& [p, c] : t.edges) edges.push_back(Json::array({of(p), of(c)}));
    Json levels = Json::array();
    for (const auto& l : t.levels) levels.push_back(of(l));
    Json chains = Json::array();
    for (const auto& c : t.chains) chains.push_back(of(c));
    return Json{{"root", of(t.root)}, {"depth", t.depth}, {"levels", std::move(levels)}, {"edges", std::move(edges)},
                {"chains", std::move(chains)}};
}

inline Json of(const BijectionReport& r) {
    auto counts = [](const std::map<Partition, long>& m) {
        Json a = Json::array();
        for (auto it = m.rbegin(); it != m.rend(); ++it) a.push_back(Json{{"shape", of(it->first)}, {"count", it->second}});
        return a;
    };
    return Json{{"pairs", r.pairs},
                {"injective", r.injective},
                {"content_preserved", r.content_preserved},
                {"counts_match", r.counts_match},
                {"chains_in_tree", r.chains_in_tree},
                {"chains_covered", r.chains_covered},
                {"image_counts", counts(r.image_counts)},
                {"expected_counts", counts(r.expected_counts)},
                {"passed", r.passed()}};
}

inline Json of(const CycleComponent& c) {
    Json o{{"index", of(c.index)}, {"j", c.j}, {"kind", component_kind(c)}};
    return o;
}

inline Json of(const StepReport& r) {
    Json recs = Json::array();
    for (const auto& b : r.records) {
        Json o{{"beta", of(b.beta)}, {"j", b.j}, {"kind", b.kind_before}};
        if (b.limit) o["limit"] = of(*b.limit);
        o["children"] = of(b.children);
        o["child_kinds"] = b.child_kinds;
        recs.push_back(std::move(o));
    }
    return Json{{"alpha", of(r.alpha)}, {"s", r.s},           {"r", r.r},
                {"M", of(r.M)},         {"l_inf", of(r.l_inf)}, {"l", r.l},
                {"records", std::move(recs)}, {"checks", of(r.checks)}, {"passed", r.passed()}};
}

inline Json of(const ChainReport& r) {
    Json ms = Json::array();
    for (const auto& m : r.M) ms.push_back(of(m));
    Json stages = Json::array();
    for (const auto& s : r.stages) {
        Json o{{"index", s.index}, {"kind", s.kind}, {"s", s.s}, {"indices", of(s.indices)}, {"checks", of(s.checks)}};
        if (s.step) o["step"] = of(*s.step);
        stages.push_back(std::move(o));
    }
    Json hist = Json::array();
    for (const auto& h : r.histories) hist.push_back(of(h));
    return Json{{"alpha", of(r.alpha)}, {"b", r.b}, {"M", std::move(ms)}, {"stages", std::move(stages)},
                {"histories", std::move(hist)}, {"passed", r.passed()}};
}

inline Json of(const WorkedExampleReport& r) {
    Json facts = Json::array();
    for (const auto& [k, v] : r.facts) facts.push_back(Json{{"fact", k}, {"value", v}});
    return Json{{"facts", std::move(facts)},
                {"final_components", of(r.final_components)},
                {"checks", of(r.checks)},
                {"passed", r.passed()}};
}

inline Json of(const QuintupleProblem& p) {
    return Json{{"n", p.n}, {"m", p.m}, {"alpha", of(p.alpha)}, {"beta", of(p.beta)}, {"a", p.a}, {"b", p.b}, {"c", p.c}};
}

inline Json of(const QuintupleReport& r) {
    Json ws = Json::array();
    for (const auto& w : r.witnesses) {
        Json f = Json::array();
        for (const auto& v : w.f) f.push_back(of(v));
        ws.push_back(Json{{"gamma", of(w.alpha)}, {"delta", of(w.beta)}, {"f", std::move(f)}, {"H", of(w.h)}});
    }
    return Json{{"problem", of(r.problem)}, {"d", r.d},           {"C", of(r.c_space)},       {"attempts", r.attempts},
                {"witnesses", std::move(ws)}, {"checks", of(r.checks)}, {"passed", r.passed()}};
}

}  // namespace pieri::json
