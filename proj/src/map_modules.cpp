#include "superweight/map_modules.hpp"

#include "superweight/errors.hpp"

#include <algorithm>
#include <sstream>

namespace sw {

namespace {

void validate_descriptor(const EvaluationDescriptor& d) {
    if (d.points.size() != d.factors.size())
        raise("PreconditionViolated", "point and factor counts differ");
    if (d.factors.empty()) raise("PreconditionViolated", "empty evaluation descriptor");
    for (size_t i = 0; i < d.points.size(); ++i) {
        if (d.points[i].is_zero()) raise("PreconditionViolated", "evaluation point is zero");
        for (size_t j = i + 1; j < d.points.size(); ++j)
            if (d.points[i] == d.points[j])
                raise("PreconditionViolated", "evaluation points must be distinct");
    }
    for (size_t i = 1; i < d.factors.size(); ++i)
        if (d.factors[i].algebra->name != d.factors[0].algebra->name)
            raise("AlgebraMismatch", "all factors must live over the same algebra");
}

} // namespace

EvaluationWindow::EvaluationWindow(EvaluationDescriptor desc) : desc_(std::move(desc)) {
    validate_descriptor(desc_);
    size_t r = desc_.factors.size();
    // enumerate tuples recursively
    std::vector<Tuple> tuples{{}};
    for (size_t i = 0; i < r; ++i) {
        std::vector<Tuple> next;
        for (const auto& t : tuples)
            for (const auto& [w, ps] : desc_.factors[i].spaces)
                for (size_t k = 0; k < ps.size(); ++k) {
                    Tuple nt = t;
                    nt.push_back({w, static_cast<long>(k)});
                    next.push_back(std::move(nt));
                }
        tuples = std::move(next);
    }
    for (auto& t : tuples) {
        Weight combined = t[0].first;
        for (size_t i = 1; i < r; ++i)
            for (size_t c = 0; c < combined.coords.size(); ++c)
                combined.coords[c] += t[i].first.coords[c];
        entries_[combined].push_back(std::move(t));
    }
    for (auto& [w, list] : entries_) {
        std::sort(list.begin(), list.end());
        auto& idx = index_[w];
        auto& ps = parities_[w];
        auto& pref = prefix_[w];
        for (size_t c = 0; c < list.size(); ++c) {
            idx[list[c]] = static_cast<long>(c);
            Parity total = Parity::even;
            std::vector<Parity> prefixes;
            for (size_t i = 0; i < r; ++i) {
                prefixes.push_back(total);
                Parity pi = desc_.factors[i].spaces.at(list[c][i].first)[list[c][i].second];
                total = parity_sum(total, pi);
            }
            ps.push_back(total);
            pref.push_back(std::move(prefixes));
        }
    }

    // assemble the n = 0 window
    window_.algebra = desc_.factors[0].algebra;
    bool all_total = std::all_of(desc_.factors.begin(), desc_.factors.end(),
                                 [](const ModuleWindow& f) { return f.total(); });
    window_.completeness = all_total ? ModuleWindow::Completeness::total
                                     : ModuleWindow::Completeness::windowed;
    for (const auto& [w, ps] : parities_) window_.spaces[w] = ps;
    for (const auto& [w, list] : entries_)
        for (const auto& t : list)
            for (size_t i = 0; i < t.size(); ++i)
                if (desc_.factors[i].frontier.count(t[i].first)) {
                    window_.frontier.insert(w);
                    break;
                }
    for (const auto& gen : window_.algebra->gens) {
        if (gen.key.kind == GenKind::cartan) continue;
        std::map<Weight, Matrix> blocks;
        for (const auto& [w, list] : entries_) {
            auto blk = act_block(gen.key, 0, w);
            if (blk.has_value() && !blk->is_zero()) blocks[w] = std::move(*blk);
        }
        if (!blocks.empty()) window_.actions[gen.key] = std::move(blocks);
    }
    // merged symbolic support
    SupportSet supp;
    supp.kind = SupportSet::Kind::finite;
    bool have_all = true;
    for (const auto& f : desc_.factors) have_all = have_all && f.support.has_value();
    if (have_all) {
        std::vector<Weight> bases{Weight(std::vector<Cyclotomic>(
            window_.algebra->coord_dim, Cyclotomic()))};
        for (const auto& f : desc_.factors) {
            if (f.support->kind == SupportSet::Kind::coset) supp.kind = SupportSet::Kind::coset;
            std::vector<Weight> next;
            for (const auto& b : bases)
                for (const auto& fb : f.support->base) {
                    Weight w = b;
                    for (size_t c = 0; c < w.coords.size(); ++c) w.coords[c] += fb.coords[c];
                    next.push_back(std::move(w));
                }
            bases = std::move(next);
            for (const auto& d : f.support->directions) supp.directions.push_back(d);
        }
        std::sort(bases.begin(), bases.end());
        bases.erase(std::unique(bases.begin(), bases.end(),
                                [](const Weight& a, const Weight& b) { return a == b; }),
                    bases.end());
        supp.base = std::move(bases);
        std::sort(supp.directions.begin(), supp.directions.end());
        supp.directions.erase(std::unique(supp.directions.begin(), supp.directions.end()),
                              supp.directions.end());
        window_.support = supp;
    }
}

long EvaluationWindow::dim_at(const Weight& w) const {
    auto it = entries_.find(w);
    return it == entries_.end() ? 0 : static_cast<long>(it->second.size());
}

Parity EvaluationWindow::parity_of(const Weight& w, long idx) const {
    return parities_.at(w)[idx];
}

std::optional<Matrix> EvaluationWindow::act_block(const GenKey& g, long n, const Weight& w,
                                                  bool* complete) const {
    auto sit = entries_.find(w);
    if (sit == entries_.end()) return std::nullopt;
    RootVector shift = g.kind == GenKind::root ? g.root
                                               : RootVector(window_.algebra->coord_dim, 0);
    Weight tw = w.shifted(shift);
    auto tit = entries_.find(tw);
    if (tit == entries_.end()) return std::nullopt;
    if (complete) *complete = true;

    const auto& gen = desc_.factors[0].algebra->gens[desc_.factors[0].algebra->index_of(g)];
    bool gen_odd = gen.parity == Parity::odd;
    Matrix blk(tit->second.size(), sit->second.size());
    const auto& tidx = index_.at(tw);
    for (size_t c = 0; c < sit->second.size(); ++c) {
        const Tuple& t = sit->second[c];
        const auto& prefixes = prefix_.at(w)[c];
        for (size_t i = 0; i < t.size(); ++i) {
            const ModuleWindow& f = desc_.factors[i];
            if (complete && !f.total() && f.frontier.count(t[i].first)) *complete = false;
            Matrix A = f.action_block(g, t[i].first);
            if (A.rows() == 0) continue;
            Weight ftw = f.target_weight(g, t[i].first);
            Cyclotomic coef = desc_.points[i].pow(n);
            if (gen_odd && prefixes[i] == Parity::odd) coef = -coef;
            for (size_t rrow = 0; rrow < A.rows(); ++rrow) {
                if (A.at(rrow, t[i].second).is_zero()) continue;
                Tuple nt = t;
                nt[i] = {ftw, static_cast<long>(rrow)};
                auto pit = tidx.find(nt);
                if (pit == tidx.end()) continue;
                blk.at(pit->second, c) += coef * A.at(rrow, t[i].second);
            }
        }
    }
    return blk;
}

std::vector<Cyclotomic> EvaluationWindow::act(const GenKey& g, long n, const Weight& w,
                                              const std::vector<Cyclotomic>& v) const {
    auto sit = entries_.find(w);
    if (sit == entries_.end())
        raise("OutOfWindow", "weight " + w.str() + " not in the evaluation window");
    if (!window_.complete_at(w))
        raise("OutOfWindow", "action at weight " + w.str() + " leaves a factor box");
    bool complete = true;
    auto blk = act_block(g, n, w, &complete);
    if (!blk.has_value()) return {}; // image weight carries no basis (true zero)
    if (!complete)
        raise("OutOfWindow", "action at weight " + w.str() + " leaves a factor box");
    return blk->apply(v);
}

std::vector<Cyclotomic> evaluation_act(const EvaluationWindow& ev, const GenKey& g, long n,
                                       const Weight& w, long basis_index) {
    std::vector<Cyclotomic> v(ev.dim_at(w), Cyclotomic());
    if (basis_index < 0 || basis_index >= ev.dim_at(w))
        raise("OutOfWindow", "basis index out of range");
    v[basis_index] = Cyclotomic(1);
    return ev.act(g, n, w, v);
}

// --- annihilator -----------------------------------------------------------------

namespace {

std::vector<Cyclotomic> poly_mul(const std::vector<Cyclotomic>& a,
                                 const std::vector<Cyclotomic>& b) {
    std::vector<Cyclotomic> r(a.size() + b.size() - 1, Cyclotomic());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::vector<Cyclotomic> poly_deriv(const std::vector<Cyclotomic>& p) {
    std::vector<Cyclotomic> d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Cyclotomic(Rational(i)));
    if (d.empty()) d.push_back(Cyclotomic());
    return d;
}

void poly_trim(std::vector<Cyclotomic>& p) {
    while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

std::vector<Cyclotomic> poly_mod(std::vector<Cyclotomic> a, const std::vector<Cyclotomic>& b) {
    poly_trim(a);
    while (a.size() >= b.size() && !(a.size() == 1 && a[0].is_zero())) {
        Cyclotomic f = a.back() * b.back().inverse();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        poly_trim(a);
        if (a.size() == 1 && a[0].is_zero()) break;
    }
    return a;
}

bool poly_squarefree(std::vector<Cyclotomic> p) {
    std::vector<Cyclotomic> q = poly_deriv(p);
    poly_trim(p);
    poly_trim(q);
    while (!(q.size() == 1 && q[0].is_zero())) {
        auto r = poly_mod(p, q);
        p = std::move(q);
        q = std::move(r);
    }
    return p.size() == 1; // gcd is a nonzero constant
}

Cyclotomic poly_eval(const std::vector<Cyclotomic>& p, const Cyclotomic& x) {
    Cyclotomic v;
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

// Does g (x) p(t) kill the window?  Checked on every complete weight.
bool kills_window(const EvaluationWindow& ev, const std::vector<Cyclotomic>& p) {
    for (const auto& gen : ev.window().algebra->gens) {
        if (gen.key.kind == GenKind::cartan) continue;
        for (const auto& [w, list] : ev.entries()) {
            if (!ev.window().complete_at(w)) continue;
            Matrix total(0, 0);
            bool first = true;
            bool complete = true;
            for (size_t n = 0; n < p.size(); ++n) {
                if (p[n].is_zero()) continue;
                auto blk = ev.act_block(gen.key, static_cast<long>(n), w, &complete);
                if (!blk.has_value() || !complete) { first = true; break; }
                Matrix scaled = blk->scaled(p[n]);
                total = first ? scaled : total + scaled;
                first = false;
            }
            if (!first && !total.is_zero()) return false;
        }
    }
    return true;
}

} // namespace

std::string poly_str(const std::vector<Cyclotomic>& p) {
    std::ostringstream os;
    bool firstterm = true;
    for (size_t i = p.size(); i-- > 0;) {
        if (p[i].is_zero()) continue;
        if (!firstterm) os << " + ";
        os << "(" << p[i].str() << ")";
        if (i == 1) os << "*t";
        else if (i > 1) os << "*t^" << i;
        firstterm = false;
    }
    if (firstterm) os << "0";
    return os.str();
}

AnnihilatorReport annihilator(const EvaluationWindow& ev, long degree_bound) {
    AnnihilatorReport rep;
    rep.generator = {Cyclotomic(1)};
    for (const auto& a : ev.desc().points)
        rep.generator = poly_mul(rep.generator, {-a, Cyclotomic(1)});
    rep.is_radical = poly_squarefree(rep.generator);

    // the generator must kill the window ...
    if (!kills_window(ev, rep.generator))
        raise("PreconditionViolated", "internal: annihilator generator does not kill the window");
    // ... while omitting any single point must not
    if (ev.desc().points.size() >= 1) {
        for (size_t skip = 0; skip < ev.desc().points.size(); ++skip) {
            std::vector<Cyclotomic> part{Cyclotomic(1)};
            for (size_t i = 0; i < ev.desc().points.size(); ++i)
                if (i != skip) part = poly_mul(part, {-ev.desc().points[i], Cyclotomic(1)});
            if (kills_window(ev, part))
                raise("PreconditionViolated",
                      "internal: a proper divisor already annihilates the window");
        }
    }
    // spot-check the equivalence on monomials t^k, k <= degree_bound
    for (long k = 0; k <= degree_bound; ++k) {
        std::vector<Cyclotomic> mono(static_cast<size_t>(k) + 1, Cyclotomic());
        mono[k] = Cyclotomic(1);
        bool vanishes_everywhere = true;
        for (const auto& a : ev.desc().points)
            if (!poly_eval(mono, a).is_zero()) vanishes_everywhere = false;
        if (kills_window(ev, mono) != vanishes_everywhere)
            raise("PreconditionViolated", "internal: annihilator equivalence failed at t^" +
                                              std::to_string(k));
    }
    return rep;
}

// --- boundedness -------------------------------------------------------------------

BoundednessReport boundedness_analyze(const EvaluationWindow& ev, const RootVector& direction,
                                      long depth) {
    const auto& desc = ev.desc();
    BoundednessReport rep;
    for (const auto& f : desc.factors)
        if (!f.total()) ++rep.infinite_factor_count;
    rep.predicted_bounded = rep.infinite_factor_count <= 1;

    if (rep.infinite_factor_count > 0) {
        bool dir_ok = false;
        for (const auto& f : desc.factors) {
            if (f.total() || !f.support || f.support->directions.empty()) continue;
            if (cone_member(f.support->directions, direction)) { dir_ok = true; break; }
        }
        if (!dir_ok)
            raise("PreconditionViolated",
                  "direction is not a positive combination of any factor's injective directions");
    }

    // base point: sum over factors of the direction-minimal box corner, so
    // the profile counts exactly the l_1 + ... + l_r = n splittings
    std::vector<Rational> dirq;
    for (long x : direction) dirq.emplace_back(x);
    Weight lambda0(std::vector<Cyclotomic>(desc.factors[0].algebra->coord_dim, Cyclotomic()));
    for (const auto& f : desc.factors) {
        const Weight* best = nullptr;
        Cyclotomic best_val;
        for (const auto& [w, ps] : f.spaces) {
            Cyclotomic val;
            for (size_t c = 0; c < w.coords.size(); ++c)
                val += w.coords[c] * Cyclotomic(dirq[c]);
            if (!best) {
                best = &w;
                best_val = val;
                continue;
            }
            Cyclotomic diff = val - best_val;
            if (diff.is_rational() && diff.rational_part().sign() < 0) {
                best = &w;
                best_val = val;
            }
        }
        for (size_t c = 0; c < lambda0.coords.size(); ++c)
            lambda0.coords[c] += best->coords[c];
    }
    for (long n = 0; n <= depth; ++n) {
        Weight w = lambda0.shifted(direction, n);
        long d = ev.dim_at(w);
        if (d == 0)
            raise("OutOfWindow", "profile depth " + std::to_string(n) +
                                     " leaves the tensor window");
        rep.measured_profile.push_back({n, d});
    }
    if (ev.window().support) rep.theta = *ev.window().support;
    return rep;
}

// --- classification witness ----------------------------------------------------------

namespace {

// Every interior homogeneous vector must regenerate the core of the window
// under the loop operators x (x) t^n, 0 <= n < r (these already separate the
// evaluation points).
bool eval_window_cyclic(const EvaluationWindow& ev) {
    const ModuleWindow& win = ev.window();
    std::vector<Weight> interior, core;
    for (const auto& [w, ps] : win.spaces)
        if (win.is_interior(w)) interior.push_back(w);
    for (const auto& w : interior) {
        bool inner = true;
        for (const auto& gen : win.algebra->gens) {
            if (gen.key.kind == GenKind::cartan || rv_is_zero(gen.weight)) continue;
            if (!win.is_interior(w.shifted(gen.weight))) { inner = false; break; }
        }
        if (inner) core.push_back(w);
    }
    if (interior.empty()) return false;
    long nmax = static_cast<long>(ev.arity());
    for (const auto& w0 : interior) {
        long d = win.dim_at(w0);
        for (long i = 0; i < d; ++i) {
            std::map<Weight, SpanBuilder> spans;
            auto builder = [&](const Weight& w) -> SpanBuilder& {
                auto it = spans.find(w);
                if (it == spans.end())
                    it = spans.emplace(w, SpanBuilder(win.dim_at(w))).first;
                return it->second;
            };
            std::vector<std::pair<Weight, std::vector<Cyclotomic>>> work;
            std::vector<Cyclotomic> v0(d, Cyclotomic());
            v0[i] = Cyclotomic(1);
            builder(w0).add(v0);
            work.push_back({w0, v0});
            while (!work.empty()) {
                auto [w, v] = work.back();
                work.pop_back();
                if (!win.complete_at(w)) continue;
                for (const auto& gen : win.algebra->gens) {
                    if (gen.key.kind == GenKind::cartan) continue;
                    for (long n = 0; n < nmax; ++n) {
                        auto blk = ev.act_block(gen.key, n, w);
                        if (!blk.has_value()) continue;
                        auto img = blk->apply(v);
                        bool zero = std::all_of(img.begin(), img.end(), [](const Cyclotomic& c) {
                            return c.is_zero();
                        });
                        if (zero) continue;
                        Weight tw = win.target_weight(gen.key, w);
                        if (builder(tw).add(img)) work.push_back({tw, img});
                    }
                }
            }
            for (const auto& cw : core)
                if (builder(cw).rank() != static_cast<size_t>(win.dim_at(cw))) return false;
        }
    }
    return true;
}

} // namespace

ClassificationWitness classification_witness(const EvaluationDescriptor& desc) {
    ClassificationWitness w;
    for (const auto& a : desc.points) w.point_strings.push_back(a.str());

    if (desc.points.size() != desc.factors.size() || desc.factors.empty()) {
        w.reasons.push_back("points/factors mismatch");
        return w;
    }
    for (size_t i = 0; i < desc.points.size(); ++i) {
        if (desc.points[i].is_zero()) w.reasons.push_back("point " + std::to_string(i) + " is zero");
        for (size_t j = i + 1; j < desc.points.size(); ++j)
            if (desc.points[i] == desc.points[j]) w.reasons.push_back("points not distinct");
    }
    if (!w.reasons.empty()) return w;

    long infinite = 0;
    for (size_t i = 0; i < desc.factors.size(); ++i) {
        const auto& f = desc.factors[i];
        w.factor_dims.push_back(f.dim());
        if (f.total()) {
            w.factor_kinds.push_back("finite");
            auto rep = simplicity_check(f);
            if (rep.verdict != SimpleVerdict::simple)
                w.reasons.push_back("factor " + std::to_string(i) + " is not simple");
            EndoBasis eb = endomorphisms(f);
            if (!(eb.dim_even == 1 && eb.dim_odd == 0))
                w.reasons.push_back("factor " + std::to_string(i) +
                                    " has nontrivial endomorphisms");
        } else {
            w.factor_kinds.push_back("dense-window");
            ++infinite;
            auto rep = simplicity_check(f);
            if (rep.verdict != SimpleVerdict::window_evidence || !rep.window_cyclic)
                w.reasons.push_back("factor " + std::to_string(i) +
                                    " lacks window evidence of simplicity");
        }
    }
    if (infinite > 1) w.reasons.push_back("two infinite-dimensional factors");
    if (!w.reasons.empty()) return w;

    EvaluationWindow ev(desc);
    w.product_window_cyclic = eval_window_cyclic(ev);
    w.accepted = true;
    return w;
}

} // namespace sw
