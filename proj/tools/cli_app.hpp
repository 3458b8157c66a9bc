#pragma once

#include "pieri/worked_example.hpp"
#include "pieri/deform.hpp"
#include "pieri/enumerative.hpp"
#include "pieri/json_io.hpp"
#include "pieri/schubgeom.hpp"
#include "pieri/seqcomb.hpp"
#include "pieri/tableaux.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace pieri::cli {

using json::Json;

inline constexpr const char* kSeedEnv = "PIERI_SEED";

/// Usage errors that surface after parsing (bad values, inconsistent sizes).
class UsageError : public Error {
public:
    using Error::Error;
};

/// Output of one verb: the JSON document, the text rendering and the
/// verification outcome.
struct Outcome {
    Json doc;
    std::string text;
    bool ok = true;
    std::string failing;
};

inline std::vector<int> parse_ints(const std::string& s, const std::string& what) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError("malformed " + what + " '" + s + "'");
        }
    }
    return out;
}

inline DecSeq parse_sequence(int n, const std::string& s) {
    try {
        return parse_seq(n, s);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

inline Partition parse_partition(const std::string& s) {
    try {
        return Partition(parse_ints(s, "partition"));
    } catch (const UsageError&) {
        throw;
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw UsageError("'" + path + "' is not valid JSON: " + e.what());
    }
}

/// Subspace from a coordinate list (1-based indices of e_i) or a JSON file
/// holding a matrix or a subspace object.
inline std::optional<Subspace> read_subspace(int n, const std::string& coords, const std::string& file) {
    if (!coords.empty() && !file.empty()) throw UsageError("give either coordinates or a file, not both");
    try {
        if (!file.empty()) return json::subspace_from(read_json_file(file), n);
        if (!coords.empty()) return Subspace::coordinate(n, parse_ints(coords, "coordinate list"));
    } catch (const UsageError&) {
        throw;
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    return std::nullopt;
}

inline Flag make_flag(const std::string& kind, int n, std::uint64_t seed) {
    if (kind == "standard") return standard_flag(n);
    if (kind == "reversed") return reversed_flag(n);
    if (kind == "random") return random_flag(n, seed);
    throw UsageError("unknown flag '" + kind + "' (standard, reversed, random)");
}

inline std::string seq_list(const std::vector<DecSeq>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].str();
    return s;
}

inline std::string rat_row(const Vec& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
    return s + "]";
}

/// Key/value lines with the values aligned.
class TextBlock {
public:
    TextBlock& kv(const std::string& k, const std::string& v) {
        rows_.emplace_back(k, v);
        return *this;
    }
    TextBlock& line(const std::string& s) {
        rows_.emplace_back(std::string(), s);
        return *this;
    }
    TextBlock& subspace(const std::string& k, const Subspace& s) {
        kv(k, "dim " + std::to_string(s.dim()));
        for (const auto& r : s.basis()) line("  " + rat_row(r));
        return *this;
    }
    TextBlock& checks(const CheckList& c) {
        std::size_t w = 0;
        for (const auto& x : c.items()) w = std::max(w, display_width(x.clause));
        for (const auto& x : c.items()) {
            std::string l = x.clause + std::string(w - display_width(x.clause) + 2, ' ') + (x.ok ? "ok" : "FAIL");
            if (!x.detail.empty()) l += "  (" + x.detail + ")";
            line(l);
        }
        return *this;
    }
    std::string str() const {
        std::size_t w = 0;
        for (const auto& [k, v] : rows_) w = std::max(w, display_width(k));
        std::string out;
        for (const auto& [k, v] : rows_) {
            if (k.empty())
                out += v + "\n";
            else
                out += k + std::string(w - display_width(k) + 2, ' ') + v + "\n";
        }
        return out;
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

inline void fold(Outcome& o, const CheckList& c) {
    if (auto bad = c.first_failure()) {
        o.ok = false;
        o.failing = bad->clause;
    }
}

inline Json header(const std::string& verb) { return Json{{"schema", "pieri." + verb + "/1"}}; }

/// Options shared by every verb.
struct Common {
    bool json = false;
    std::uint64_t seed = 0;
};

/// Values of all verb options; each verb reads only its own.
struct Args {
    int n = 0;
    std::string alpha;
    std::string beta;
    std::string lambda;
    int r = 0;
    int b = 0;
    int s = 0;
    int m = 0;
    int l = 0;
    int mode = 0;
    int a = 0;
    int c = -1;
    std::string flag = "standard";
    std::string position = "reducible";
    std::string coords;
    std::string file;
    std::string m_coords;
    std::string m_file;
    std::string linf_coords;
    std::string linf_file;
    bool has_b = false;
};

inline DecSeq alpha_from(const Args& x) {
    DecSeq a = parse_sequence(x.n, x.alpha);
    if (x.m != 0 && x.m != a.m()) throw UsageError("--m does not match the length of alpha");
    return a;
}

inline Outcome verb_pieri(const Args& x) {
    const DecSeq a = alpha_from(x);
    if (x.r < 0) throw UsageError("--r must be non-negative");
    const auto set = pieri_set(a, x.r);
    Outcome o;
    o.doc = header("pieri");
    o.doc.update(Json{{"n", x.n}, {"m", a.m()}, {"alpha", json::of(a)}, {"r", x.r}, {"sequences", json::of(set)}});
    TextBlock t;
    t.kv("alpha*r", a.str() + "*" + std::to_string(x.r) + " (n=" + std::to_string(x.n) + ")");
    t.kv("count", std::to_string(set.size()));
    for (const auto& g : set) t.line(g.str());
    o.text = t.str();
    return o;
}

inline CheckList tree_partition_check(const PieriTree& t) {
    CheckList c;
    std::map<DecSeq, int> hits;
    for (const auto& ch : t.chains) ++hits[ch.back()];
    const auto& leaves = t.levels.back();
    bool once = hits.size() == leaves.size();
    for (const auto& g : leaves) once = once && hits[g] == 1;
    c.add("every leaf reached by exactly one chain", once);
    c.add("chain count equals |alpha*b|", t.chains.size() == leaves.size(),
          std::to_string(t.chains.size()) + " vs " + std::to_string(leaves.size()));
    return c;
}

inline Outcome verb_tree(const Args& x, bool chains_only) {
    const DecSeq a = alpha_from(x);
    if (x.b < 0) throw UsageError("--b must be non-negative");
    const PieriTree t = tree_chains(a, x.b);
    const CheckList c = tree_partition_check(t);
    Outcome o;
    o.doc = header(chains_only ? "chains" : "tree");
    o.doc.update(Json{{"n", x.n}, {"m", a.m()}});
    TextBlock tb;
    if (chains_only) {
        Json ch = Json::array();
        for (const auto& path : t.chains) ch.push_back(json::of(path));
        o.doc.update(Json{{"root", json::of(a)}, {"b", x.b}, {"chains", std::move(ch)}});
        tb.kv("chains", std::to_string(t.chains.size()));
        for (const auto& path : t.chains) tb.line(seq_list(path));
    } else {
        o.doc.update(json::of(t));
        for (std::size_t i = 0; i < t.levels.size(); ++i) tb.kv("level " + std::to_string(i), seq_list(t.levels[i]));
        for (const auto& [p, ch] : t.edges) tb.kv("edge", p.str() + " -> " + ch.str());
    }
    o.doc["checks"] = json::of(c);
    tb.checks(c);
    o.text = tb.str();
    fold(o, c);
    return o;
}

inline Outcome verb_schensted(const Args& x) {
    const Partition l = parse_partition(x.lambda);
    if (x.m < 1 || x.b < 0) throw UsageError("need --m >= 1 and --b >= 0");
    if (l.length() > x.m) throw UsageError("lambda has more than m parts");
    const BijectionReport r = pieri_bijection_check(l, x.b, x.m);
    Outcome o;
    o.doc = header("schensted");
    o.doc.update(Json{{"lambda", json::of(l)}, {"b", x.b}, {"m", x.m}});
    o.doc.update(json::of(r));
    TextBlock t;
    t.kv("pairs", std::to_string(r.pairs));
    t.kv("injective", r.injective ? "yes" : "no");
    t.kv("content_preserved", r.content_preserved ? "yes" : "no");
    t.kv("counts_match", r.counts_match ? "yes" : "no");
    t.kv("chains_in_tree", r.chains_in_tree ? "yes" : "no");
    t.kv("chains_covered", r.chains_covered ? "yes" : "no");
    for (auto it = r.image_counts.rbegin(); it != r.image_counts.rend(); ++it)
        t.kv("image " + it->first.str(), std::to_string(it->second));
    o.text = t.str();
    CheckList c;
    c.add("insertion injective", r.injective);
    c.add("content preserved", r.content_preserved);
    c.add("image counts match", r.counts_match);
    c.add("shape chains lie in the tree", r.chains_in_tree);
    c.add("every tree chain occurs", r.chains_covered);
    fold(o, c);
    return o;
}

inline Outcome verb_schur(const Args& x) {
    const Partition l = parse_partition(x.lambda);
    if (x.m < 1) throw UsageError("need --m >= 1");
    const SparsePoly p = schur_expand(l, x.m);
    Outcome o;
    o.doc = header("schur");
    o.doc.update(Json{{"lambda", json::of(l)}, {"m", x.m}, {"polynomial", json::of(p)}});
    TextBlock t;
    t.kv("s_lambda", l.str() + " in " + std::to_string(x.m) + " variables, " + std::to_string(p.terms().size()) + " terms");
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        t.kv("  x^(" + exponent_key(it->first) + ")", to_string(it->second));
    if (x.has_b) {
        if (x.b < 0) throw UsageError("--b must be non-negative");
        const SchurExpansion got = schur_decompose(p * h_poly(x.b, x.m), x.m);
        SchurExpansion want;
        for (const auto& mu : partition_pieri(l, x.b, x.m)) want[mu] = 1;
        CheckList c;
        c.add("s_lambda h_b = sum over lambda*b", got == want);
        o.doc.update(Json{{"b", x.b}, {"product", json::of(got)}, {"checks", json::of(c)}});
        t.kv("s_lambda h_b", "b=" + std::to_string(x.b) + ", " + std::to_string(got.size()) + " Schur terms");
        for (auto it = got.rbegin(); it != got.rend(); ++it) t.kv("  s" + it->first.str(), std::to_string(it->second));
        t.checks(c);
        fold(o, c);
    }
    o.text = t.str();
    return o;
}

struct SpecialInput {
    DecSeq alpha;
    Flag flag;
    Subspace l;
};

/// α, F and L for the verbs on Ω_α F ∩ Ω_L. L is read from --L/--file or,
/// when absent, built from --position (generic or reducible).
inline SpecialInput special_input(const Args& x, const Common& g) {
    const DecSeq a = alpha_from(x);
    const Flag f = make_flag(x.flag, x.n, g.seed);
    if (x.s < 1) throw UsageError("--s must be positive");
    const int dim_l = x.n + 1 - a.m() - x.s;
    if (dim_l < 1) throw UsageError("n+1-m-s must be positive");
    auto l = read_subspace(x.n, x.coords, x.file);
    if (!l) {
        Rng rng(g.seed);
        if (x.position == "generic")
            l = random_subspace(x.n, dim_l, rng);
        else if (x.position == "reducible")
            l = reducible_special_subspace(a, x.s, f, rng);
        else
            throw UsageError("unknown position '" + x.position + "' (generic, reducible)");
        if (!l) throw UsageError("no reducible L exists for these parameters");
    }
    if (l->dim() != dim_l)
        throw UsageError("L has dimension " + std::to_string(l->dim()) + ", expected n+1-m-s = " + std::to_string(dim_l));
    return {a, f, *l};
}

inline Outcome verb_classify(const Args& x, const Common& g) {
    const auto in = special_input(x, g);
    const Classification c = classify_pieri(in.alpha, in.flag, in.l, x.s);
    Outcome o;
    o.doc = header("classify");
    o.doc.update(Json{{"n", x.n}, {"m", in.alpha.m()}, {"alpha", json::of(in.alpha)}, {"s", x.s}, {"L", json::of(in.l)}});
    o.doc.update(json::of(c));
    TextBlock t;
    t.kv("verdict", verdict_name(c.verdict));
    std::string eq;
    for (int j : c.equality) eq += (eq.empty() ? "" : ",") + std::to_string(j);
    t.kv("equality", "{" + eq + "}");
    t.line("j  alpha_j  dim  critical  expected");
    for (const auto& r : c.rows) {
        std::ostringstream os;
        os << std::setw(1) << r.j << "  " << std::setw(7) << r.alpha_j << "  " << std::setw(3) << r.dim << "  "
           << std::setw(8) << r.critical << "  " << std::setw(8) << r.expected;
        t.line(os.str());
    }
    o.text = t.str();
    return o;
}

inline Outcome verb_cell(const Args& x, const Common& g) {
    const auto in = special_input(x, g);
    const bool member = cell_member(in.l, in.alpha, x.s, in.flag);
    const DecSeq idx = cell_index(in.alpha, x.s, x.n);
    const DecSeq jumps = jump_set(in.l, in.flag);
    Outcome o;
    o.doc = header("cell");
    o.doc.update(Json{{"n", x.n},
                      {"m", in.alpha.m()},
                      {"alpha", json::of(in.alpha)},
                      {"s", x.s},
                      {"L", json::of(in.l)},
                      {"member", member},
                      {"cell_index", json::of(idx)},
                      {"jump_set", json::of(jumps)}});
    TextBlock t;
    t.kv("member", member ? "yes" : "no");
    t.kv("cell_index", idx.str());
    t.kv("jump_set", jumps.str());
    if (member) {
        const bool dims_ok = cell_dimension_check(in.l, in.alpha, x.s, in.flag);
        o.doc["intermediate_dims_ok"] = dims_ok;
        t.kv("intermediate_dims_ok", dims_ok ? "yes" : "no");
    }
    o.text = t.str();
    return o;
}

inline Outcome verb_witness(const Args& x, const Common& g, bool tangent) {
    const auto in = special_input(x, g);
    const auto modes = witness_modes(in.alpha, in.flag, in.l);
    std::vector<int> use;
    if (x.mode != 0) {
        if (std::find(modes.begin(), modes.end(), x.mode) == modes.end())
            throw UsageError("mode " + std::to_string(x.mode) + " is not available for this L");
        use = {x.mode};
    } else {
        use = modes;
    }
    if (use.empty()) throw UsageError("no witness mode is available for this L");
    Rng rng(g.seed);
    Outcome o;
    o.doc = header(tangent ? "tangent" : "witness");
    o.doc.update(Json{{"n", x.n}, {"m", in.alpha.m()}, {"alpha", json::of(in.alpha)}, {"s", x.s}, {"L", json::of(in.l)}});
    Json ws = Json::array();
    TextBlock t;
    CheckList c;
    for (int mode : use) {
        const Subspace h = witness_point(in.alpha, in.flag, in.l, mode, rng);
        Json w{{"mode", mode}, {"H", json::of(h)}};
        t.subspace("H (mode " + std::to_string(mode) + ")", h);
        if (tangent) {
            const int codim = tangent_codim(h, in.alpha, in.flag, in.l);
            w["tangent_codim"] = codim;
            t.kv("  tangent_codim", std::to_string(codim));
            c.add("tangent codim equals s at mode " + std::to_string(mode), codim == x.s,
                  std::to_string(codim) + " vs " + std::to_string(x.s));
        }
        ws.push_back(std::move(w));
    }
    o.doc["witnesses"] = std::move(ws);
    if (tangent) {
        o.doc["checks"] = json::of(c);
        t.checks(c);
        fold(o, c);
    }
    o.text = t.str();
    return o;
}

/// Random hyperplane of k^N containing M_l but not M_{l−1}.
inline Subspace random_l_inf(const Flag& mflag, int l, Rng& rng) {
    const Subspace ann = annihilator(mflag[l]);
    for (;;) {
        const Vec phi = random_vector(ann, rng);
        const Subspace h = annihilator(Subspace::span(mflag.ambient(), {phi}));
        if (!mflag[l - 1].is_subspace_of(h)) return h;
    }
}

inline Outcome verb_pencil(const Args& x, const Common& g) {
    if (x.n < 1) throw UsageError("--n must be positive");
    if (x.l < 2 || x.l > x.n + 1) throw UsageError("--l must lie in [2, N+1]");
    const Flag mflag = x.flag == "standard" ? standard_flag(x.n) : make_flag(x.flag, x.n, g.seed);
    Rng rng(g.seed);
    const Subspace l_inf = random_l_inf(mflag, x.l, rng);
    const Pencil p = build_pencil(mflag, x.l, l_inf);
    const CheckList c = pencil_check(p);
    Outcome o;
    o.doc = header("pencil");
    o.doc.update(Json{{"N", x.n}, {"l", x.l}, {"l_inf", json::of(l_inf)}, {"family", json::of(p.family)}, {"checks", json::of(c)}});
    TextBlock t;
    t.kv("N", std::to_string(x.n));
    t.kv("l", std::to_string(x.l));
    t.subspace("L_inf", l_inf);
    t.checks(c);
    o.text = t.str();
    fold(o, c);
    return o;
}

inline Outcome verb_step(const Args& x, const Common& g) {
    const DecSeq a = alpha_from(x);
    const Flag f = make_flag(x.flag, x.n, g.seed);
    auto m = read_subspace(x.n, x.m_coords, x.m_file);
    auto li = read_subspace(x.n, x.linf_coords, x.linf_file);
    if (!m || !li) throw UsageError("step needs --M and --linf (coordinates or files)");
    StepReport r;
    try {
        r = step_verify(a, x.s, x.r, f, *m, *li, g.seed);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    Outcome o;
    o.doc = header("step");
    o.doc.update(Json{{"n", x.n}, {"m", a.m()}});
    o.doc.update(json::of(r));
    TextBlock t;
    t.kv("alpha", a.str());
    t.kv("s, r", std::to_string(x.s) + ", " + std::to_string(x.r));
    t.kv("l", std::to_string(r.l));
    for (const auto& b : r.records) t.kv("beta " + b.beta.str(), "j=" + std::to_string(b.j) + " -> " + seq_list(b.children));
    t.checks(r.checks);
    o.text = t.str();
    fold(o, r.checks);
    return o;
}

inline Outcome verb_chain(const Args& x, const Common& g) {
    const DecSeq a = alpha_from(x);
    const Flag f = make_flag(x.flag, x.n, g.seed);
    if (x.b < 1) throw UsageError("--b must be positive");
    const int dim_k = x.n + 1 - a.m() - x.b;
    if (dim_k < 1) throw UsageError("n+1-m-b must be positive");
    auto k = read_subspace(x.n, x.coords, x.file);
    if (!k) {
        std::vector<int> idx;
        for (int i = 1; i <= dim_k; ++i) idx.push_back(i);
        k = Subspace::coordinate(x.n, idx);
    }
    ChainReport r;
    try {
        r = chain_deformation(a, x.b, f, *k, g.seed);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    Outcome o;
    o.doc = header("chain-deform");
    o.doc.update(Json{{"n", x.n}, {"m", a.m()}, {"K", json::of(*k)}});
    o.doc.update(json::of(r));
    TextBlock t;
    t.kv("alpha", a.str());
    t.kv("b", std::to_string(x.b));
    for (const auto& s : r.stages) {
        t.kv("stage " + std::to_string(s.index), s.kind + " s=" + std::to_string(s.s) + ": " + seq_list(s.indices));
        t.checks(s.checks);
    }
    for (const auto& h : r.histories) t.kv("history", seq_list(h));
    o.text = t.str();
    for (const auto& s : r.stages) {
        CheckList tagged;
        tagged.append(s.checks, "stage " + std::to_string(s.index) + ": ");
        if (o.ok) fold(o, tagged);
    }
    return o;
}

inline Outcome verb_worked_example(const Common& g) {
    const WorkedExampleReport r = worked_example_run(g.seed);
    Outcome o;
    o.doc = header("appendix-a");
    o.doc.update(json::of(r));
    o.text = r.table();
    fold(o, r.checks);
    return o;
}

inline QuintupleProblem problem_from(const Args& x, bool derive_c) {
    QuintupleProblem p{x.n, 0, alpha_from(x), parse_sequence(x.n, x.beta), x.a, x.b, x.c};
    p.m = p.alpha.m();
    if (derive_c && p.c < 0) p.c = p.m * (p.n - p.m) - codim(p.alpha) - codim(p.beta) - p.a - p.b;
    try {
        p.validate();
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    return p;
}

inline Outcome verb_count(const Args& x) {
    const QuintupleProblem p = problem_from(x, false);
    const long d = count_pairs_d(p);
    const long o2 = pieri_pairing_oracle(p);
    std::optional<long> o1;
    if (p.n <= kOracleMaxN) o1 = cohomology_oracle(p);
    const bool agree = d == o2 && (!o1 || *o1 == d);
    Outcome o;
    o.doc = header("count-real");
    o.doc.update(Json{{"problem", json::of(p)}, {"d", d}, {"oracle1", o1 ? Json(*o1) : Json(nullptr)}, {"oracle2", o2}, {"agree", agree}});
    TextBlock t;
    t.kv("problem", p.str());
    t.kv("d", std::to_string(d));
    t.kv("oracle1", o1 ? std::to_string(*o1) : std::string("skipped (n > ") + std::to_string(kOracleMaxN) + ")");
    t.kv("oracle2", std::to_string(o2));
    t.kv("agree", agree ? "yes" : "no");
    o.text = t.str();
    if (!agree) {
        o.ok = false;
        o.failing = "d agrees with both oracles";
    }
    return o;
}

inline Outcome verb_triple(const Args& x, const Common& g) {
    const QuintupleProblem p = problem_from(x, true);
    const QuintupleReport r = quintuple_witnesses(p, g.seed);
    Outcome o;
    o.doc = header("triple-witness");
    o.doc.update(json::of(r));
    TextBlock t;
    t.kv("problem", p.str());
    t.kv("d", std::to_string(r.d));
    t.subspace("C", r.c_space);
    for (const auto& w : r.witnesses) t.subspace("H " + w.alpha.str() + "|" + w.beta.str(), w.h);
    t.checks(r.checks);
    o.text = t.str();
    fold(o, r.checks);
    return o;
}

/// Runs the command line (without the program name). Exit codes: 0 success
/// or verification pass, 1 verification failure, 2 usage error.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pieri sets and explicit Schubert degenerations", "pieri"};
    app.require_subcommand(1);
    app.fallthrough();
    Common g;
    if (const char* env = std::getenv(kSeedEnv)) {
        try {
            g.seed = std::stoull(env);
        } catch (const std::exception&) {
            err << "error: " << kSeedEnv << " is not an unsigned integer\n";
            return 2;
        }
    }
    app.add_flag("--json", g.json, "emit JSON");
    app.add_option("--seed", g.seed, "seed for all random choices (overrides $PIERI_SEED)");

    Args x;
    std::map<std::string, std::function<Outcome()>> verbs;
    auto n_opt = [&](CLI::App* s) { s->add_option("--n", x.n, "ambient dimension")->required(); };
    auto alpha_opt = [&](CLI::App* s) {
        s->add_option("--alpha", x.alpha, "sequence, largest first (7,4,1)")->required();
        s->add_option("--m", x.m, "length of alpha (checked when given)");
    };
    auto flag_opt = [&](CLI::App* s) { s->add_option("--flag", x.flag, "standard, reversed or random"); };
    auto l_opts = [&](CLI::App* s) {
        n_opt(s);
        alpha_opt(s);
        s->add_option("--s", x.s, "special codimension")->required();
        s->add_option("--L", x.coords, "L as coordinate indices e_i (1-based)");
        s->add_option("--file", x.file, "L as a JSON matrix or subspace");
        s->add_option("--position", x.position, "L when not given: generic or reducible");
        flag_opt(s);
    };

    auto* pieri = app.add_subcommand("pieri", "the Pieri set alpha*r");
    n_opt(pieri);
    alpha_opt(pieri);
    pieri->add_option("--r", x.r, "codimension step")->required();
    verbs["pieri"] = [&] { return verb_pieri(x); };

    for (const char* name : {"tree", "chains"}) {
        auto* s = app.add_subcommand(name, std::string(name) == "tree" ? "the tree T_{alpha,b}" : "root-to-leaf chains of T_{alpha,b}");
        n_opt(s);
        alpha_opt(s);
        s->add_option("--b", x.b, "depth")->required();
        const bool ch = std::string(name) == "chains";
        verbs[name] = [&, ch] { return verb_tree(x, ch); };
    }

    auto* sch = app.add_subcommand("schensted", "Schensted insertion check for lambda*b");
    sch->add_option("--lambda", x.lambda, "partition, largest first")->required();
    sch->add_option("--b", x.b, "row length")->required();
    sch->add_option("--m", x.m, "number of variables")->required();
    verbs["schensted"] = [&] { return verb_schensted(x); };

    auto* schur = app.add_subcommand("schur", "Schur polynomial, optionally times h_b");
    schur->add_option("--lambda", x.lambda, "partition, largest first")->required();
    schur->add_option("--m", x.m, "number of variables")->required();
    schur->add_option("--b", x.b, "multiply by h_b and decompose");
    verbs["schur"] = [&] { return verb_schur(x); };

    auto* cls = app.add_subcommand("classify", "classify Omega_alpha F ∩ Omega_L");
    l_opts(cls);
    verbs["classify"] = [&] { return verb_classify(x, g); };

    auto* cell = app.add_subcommand("cell", "membership in the cell U_{alpha,s}");
    l_opts(cell);
    verbs["cell"] = [&] { return verb_cell(x, g); };

    auto* wit = app.add_subcommand("witness", "witness planes of Omega_alpha F ∩ Omega_L");
    l_opts(wit);
    wit->add_option("--mode", x.mode, "stratum index j (default: every available mode)");
    verbs["witness"] = [&] { return verb_witness(x, g, false); };

    auto* tan = app.add_subcommand("tangent", "tangent codimension at witness planes");
    l_opts(tan);
    tan->add_option("--mode", x.mode, "stratum index j (default: every available mode)");
    verbs["tangent"] = [&] { return verb_witness(x, g, true); };

    auto* pen = app.add_subcommand("pencil", "pencil of hyperplanes adapted to a flag");
    pen->add_option("--n", x.n, "ambient dimension N")->required();
    pen->add_option("--l", x.l, "index l in [2, N+1]")->required();
    flag_opt(pen);
    verbs["pencil"] = [&] { return verb_pencil(x, g); };

    auto* step = app.add_subcommand("step", "one degeneration step from Y_{alpha,r}(F,L_t)");
    n_opt(step);
    alpha_opt(step);
    step->add_option("--s", x.s, "cell index s")->required();
    step->add_option("--r", x.r, "cycle level r")->required();
    step->add_option("--M", x.m_coords, "M as coordinate indices");
    step->add_option("--M-file", x.m_file, "M as a JSON matrix or subspace");
    step->add_option("--linf", x.linf_coords, "L_inf as coordinate indices");
    step->add_option("--linf-file", x.linf_file, "L_inf as a JSON matrix or subspace");
    flag_opt(step);
    verbs["step"] = [&] { return verb_step(x, g); };

    auto* chain = app.add_subcommand("chain-deform", "full chain from Omega_alpha F ∩ Omega_K to the Pieri sum");
    n_opt(chain);
    alpha_opt(chain);
    chain->add_option("--b", x.b, "special codimension")->required();
    chain->add_option("--K", x.coords, "K as coordinate indices (default e_1..e_{n+1-m-b})");
    chain->add_option("--file", x.file, "K as a JSON matrix or subspace");
    flag_opt(chain);
    verbs["chain-deform"] = [&] { return verb_chain(x, g); };

    app.add_subcommand("appendix-a", "the worked n=9, alpha=741 family");
    verbs["appendix-a"] = [&] { return verb_worked_example(g); };

    auto problem_opts = [&](CLI::App* s, bool c_required) {
        n_opt(s);
        alpha_opt(s);
        s->add_option("--beta", x.beta, "second sequence")->required();
        s->add_option("--a", x.a, "codimension of the condition A");
        s->add_option("--b", x.b, "codimension of the condition B");
        auto* c = s->add_option("--c", x.c, "codimension of the condition C");
        if (c_required) {
            s->get_option("--a")->required();
            s->get_option("--b")->required();
            c->required();
        }
    };
    auto* count = app.add_subcommand("count-real", "the count d and its two oracles");
    problem_opts(count, true);
    verbs["count-real"] = [&] { return verb_count(x); };

    auto* triple = app.add_subcommand("triple-witness", "explicit real solutions H_{gamma delta}");
    problem_opts(triple, false);
    verbs["triple-witness"] = [&] { return verb_triple(x, g); };

    std::vector<std::string> rev(argv.rbegin(), argv.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    x.has_b = schur->count("--b") > 0;

    const std::string verb = app.get_subcommands().front()->get_name();
    Outcome o;
    try {
        o = verbs.at(verb)();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (g.json) {
        o.doc["ok"] = o.ok;
        if (!o.ok) o.doc["failing_clause"] = o.failing;
        out << o.doc.dump(2) << "\n";
    } else {
        out << o.text;
    }
    if (!o.ok) {
        err << "FAIL: " << o.failing << "\n";
        return 1;
    }
    return 0;
}

}  // namespace pieri::cli
