#include "superweight/affine_loop.hpp"

#include "superweight/errors.hpp"

#include <algorithm>
#include <numeric>

namespace sw {

bool level_forced_zero(const Cyclotomic& h_norm, long weight_dim, const Cyclotomic& k) {
    if (h_norm.is_zero()) raise("BadParameter", "(h,h) must be nonzero");
    if (weight_dim < 1) raise("BadParameter", "weight space dimension must be positive");
    // trace of a commutator vanishes; the bracket contributes dim*(h,h)*k
    return (Cyclotomic(Rational(weight_dim)) * h_norm * k).is_zero();
}

namespace {

void validate_chi(const ChiData& chi) {
    if (chi.points.empty()) raise("BadParameter", "chi needs at least one point");
    for (size_t i = 0; i < chi.points.size(); ++i) {
        if (chi.points[i].is_zero()) raise("BadParameter", "chi points must be nonzero");
        for (size_t j = i + 1; j < chi.points.size(); ++j)
            if (chi.points[i] == chi.points[j])
                raise("BadParameter", "chi points must be distinct");
    }
    if (chi.h_values.empty()) raise("BadParameter", "chi needs at least one Cartan sample");
    for (const auto& row : chi.h_values)
        if (row.size() != chi.points.size())
            raise("DimensionMismatch", "chi row width must match the point count");
}

} // namespace

long chi_period(const ChiData& chi) {
    validate_chi(chi);
    long k1 = static_cast<long>(chi.points.size()); // recurrence order

    auto value = [&](const std::vector<Cyclotomic>& row, long n) {
        Cyclotomic s;
        for (size_t i = 0; i < chi.points.size(); ++i)
            s += chi.points[i].pow(n) * row[i];
        return s;
    };
    auto nonzero_at = [&](long n) {
        for (const auto& row : chi.h_values)
            if (!value(row, n).is_zero()) return true;
        return false;
    };

    // The sequence satisfies a linear recurrence of order k1 with invertible
    // leading/trailing coefficients, so vanishing at k1 consecutive members
    // of an arithmetic class certifies vanishing on the whole class.
    long g = 0;
    for (long n = 1; n <= k1; ++n)
        if (nonzero_at(n)) g = std::gcd(g, n);
    if (g == 0) raise("AllZero", "chi vanishes identically");

    for (;;) {
        bool restart = false;
        for (long c = 1; c < g && !restart; ++c) {
            for (long j = 0; j < k1; ++j) {
                long n = c + j * g;
                if (nonzero_at(n)) {
                    g = std::gcd(g, n);
                    restart = true;
                    break;
                }
            }
        }
        if (!restart) break;
    }
    return g;
}

Weight affine_weight(const Weight& finite, long degree) {
    Weight w = finite;
    w.level = Cyclotomic();
    w.degree = degree;
    return w;
}

LoopWindow::LoopWindow(EvaluationDescriptor desc, long radius)
    : ev_(std::move(desc)), radius_(radius) {
    if (radius < 0) raise("BadParameter", "t-window radius must be nonnegative");
}

LoopWindow loop_module(const EvaluationDescriptor& desc, long radius) {
    return LoopWindow(desc, radius);
}

long LoopWindow::dim_at(const Weight& finite, long degree) const {
    if (degree < -radius_ || degree > radius_) return 0;
    return ev_.dim_at(finite);
}

std::vector<std::pair<Weight, long>> LoopWindow::weights() const {
    std::vector<std::pair<Weight, long>> out;
    for (long n = -radius_; n <= radius_; ++n)
        for (const auto& [w, list] : ev_.entries()) out.push_back({w, n});
    return out;
}

std::optional<Matrix> LoopWindow::act_block(const GenKey& g, long s, const Weight& finite,
                                            long degree, bool* complete) const {
    if (degree < -radius_ || degree > radius_) return std::nullopt;
    if (degree + s < -radius_ || degree + s > radius_) return std::nullopt;
    return ev_.act_block(g, s, finite, complete);
}

// --- decomposition --------------------------------------------------------------------

LoopDecomposition loop_decompose(const LoopWindow& lw,
                                 const std::vector<Weight>& generator_weights) {
    const EvaluationWindow& ev = lw.evaluation();
    const auto& desc = ev.desc();
    if (generator_weights.size() != desc.factors.size())
        raise("PreconditionViolated", "one generator weight per factor expected");
    long windowed = 0;
    for (const auto& f : desc.factors)
        if (!f.total()) ++windowed;
    if (windowed > 1)
        raise("PreconditionViolated", "at most one windowed dense factor allowed");
    for (size_t i = 0; i < desc.factors.size(); ++i) {
        if (desc.factors[i].dim_at(generator_weights[i]) != 1)
            raise("PreconditionViolated",
                  "generator weight " + std::to_string(i) + " must carry a 1-dim space");
    }

    // chi data: sample every Cartan generator of the ambient algebra
    ChiData chi;
    chi.points = desc.points;
    for (const auto& gen : desc.factors[0].algebra->gens) {
        if (gen.key.kind != GenKind::cartan) continue;
        std::vector<Cyclotomic> row;
        for (const auto& lam : generator_weights) row.push_back(lam.eval(gen.cartan_coords));
        chi.h_values.push_back(std::move(row));
    }
    long r = chi_period(chi);

    // smallest positive nonvanishing exponent gives the t-step of the
    // Cartan-loop climb (equals r on every toolkit fixture)
    long step = r;
    {
        auto nonzero_at = [&](long n) {
            for (const auto& row : chi.h_values) {
                Cyclotomic s;
                for (size_t i = 0; i < chi.points.size(); ++i)
                    s += chi.points[i].pow(n) * row[i];
                if (!s.is_zero()) return true;
            }
            return false;
        };
        for (long n = 1; n <= 2 * r; ++n)
            if (nonzero_at(n)) { step = n; break; }
    }

    long margin = std::max<long>(step, 1);
    if (lw.radius() < margin)
        raise("WindowTooSmall", "t-window too small for the decomposition step");

    // combined generator weight and basis position
    Weight lambda_sum(std::vector<Cyclotomic>(desc.factors[0].algebra->coord_dim, Cyclotomic()));
    for (const auto& lam : generator_weights)
        for (size_t c = 0; c < lambda_sum.coords.size(); ++c)
            lambda_sum.coords[c] += lam.coords[c];
    EvaluationWindow::Tuple gen_tuple;
    for (const auto& lam : generator_weights) gen_tuple.push_back({lam, 0});
    const auto& at_lambda = ev.entries().at(lambda_sum);
    long gen_pos = -1;
    for (size_t c = 0; c < at_lambda.size(); ++c)
        if (at_lambda[c] == gen_tuple) gen_pos = static_cast<long>(c);
    if (gen_pos < 0) raise("PreconditionViolated", "generator tuple not found in the window");

    // closure of each v_{lambda,i} under x (x) t^s, |s| <= step
    struct Key {
        Weight w;
        long n;
        bool operator<(const Key& o) const {
            if (n != o.n) return n < o.n;
            return w < o.w;
        }
    };
    const ModuleWindow& win = ev.window();

    LoopDecomposition out;
    out.r = r;
    out.step = step;
    std::vector<std::map<Key, SpanBuilder>> spans(r);
    for (long i = 0; i < r; ++i) {
        auto builder = [&](const Key& k) -> SpanBuilder& {
            auto it = spans[i].find(k);
            if (it == spans[i].end())
                it = spans[i].emplace(k, SpanBuilder(ev.dim_at(k.w))).first;
            return it->second;
        };
        std::vector<std::pair<Key, std::vector<Cyclotomic>>> work;
        std::vector<Cyclotomic> v0(ev.dim_at(lambda_sum), Cyclotomic());
        v0[gen_pos] = Cyclotomic(1);
        Key k0{lambda_sum, i};
        builder(k0).add(v0);
        work.push_back({k0, v0});
        while (!work.empty()) {
            auto [key, vec] = work.back();
            work.pop_back();
            if (!win.complete_at(key.w)) continue;
            for (const auto& gen : win.algebra->gens) {
                Weight tw = win.target_weight(gen.key, key.w);
                for (long s = -step; s <= step; ++s) {
                    if (gen.key.kind == GenKind::cartan && s == 0) continue; // diagonal
                    bool complete = true;
                    auto blk = lw.act_block(gen.key, s, key.w, key.n, &complete);
                    if (!blk.has_value() || !complete) continue;
                    auto img = blk->apply(vec);
                    bool zero = std::all_of(img.begin(), img.end(),
                                            [](const Cyclotomic& c) { return c.is_zero(); });
                    if (zero) continue;
                    Key tk{tw, key.n + s};
                    if (builder(tk).add(img)) work.push_back({tk, img});
                }
            }
        }
    }

    // interior of the loop window: complete evaluation weights, t-degrees
    // reachable without touching the t-boundary
    std::vector<Key> interior;
    for (long n = -(lw.radius() - margin); n <= lw.radius() - margin; ++n)
        for (const auto& [w, list] : ev.entries())
            if (win.is_interior(w)) interior.push_back({w, n});

    // direct sum and coverage on the interior
    for (const auto& key : interior) {
        long total_rank = 0;
        SpanBuilder joint(ev.dim_at(key.w));
        for (long i = 0; i < r; ++i) {
            auto it = spans[i].find(key);
            if (it == spans[i].end()) continue;
            total_rank += static_cast<long>(it->second.rank());
            for (const auto& row : it->second.rows()) joint.add(row);
        }
        if (static_cast<long>(joint.rank()) != total_rank)
            raise("PeriodMismatch", "component closures collide at degree " +
                                        std::to_string(key.n));
        if (total_rank != ev.dim_at(key.w))
            raise("PeriodMismatch", "components do not fill the window interior at degree " +
                                        std::to_string(key.n));
    }

    for (long i = 0; i < r; ++i) {
        LoopComponent comp;
        comp.generator_class = i;
        for (const auto& key : interior) {
            auto it = spans[i].find(key);
            long d = it == spans[i].end() ? 0 : static_cast<long>(it->second.rank());
            if (d > 0) comp.dims[{key.w, key.n}] = d;
            comp.interior_dim += d;
        }
        out.components.push_back(std::move(comp));
    }
    return out;
}

// --- affine Kac characters ----------------------------------------------------------------

CharacterWindow affine_kac_character(const RootSystem& rs, const CharacterWindow& charS,
                                     long depth) {
    if (!rs.is_type_I()) raise("NotTypeI", rs.family.label() + " is not of type I");
    if (depth < 0) raise("BadParameter", "depth must be nonnegative");
    if (charS.mult.empty()) return {};

    auto grading = distinguished_grading(rs);
    std::vector<RootVector> lowering_odd; // Delta(g_{-1})
    for (const auto& rd : rs.roots)
        if (rd.parity == Parity::odd && grading[rd.coords] == -1)
            lowering_odd.push_back(rd.coords);

    long dmin = 0, dmax = 0;
    bool first = true;
    CharacterWindow state;
    for (const auto& [w, mult] : charS.mult) {
        Weight aw = affine_weight(w, w.degree.value_or(0));
        state.mult[aw] += mult;
        long d = aw.degree.value_or(0);
        if (first || d < dmin) dmin = d;
        if (first || d > dmax) dmax = d;
        first = false;
    }

    // fermionic factors (1 + e^{beta + n delta}) for beta in Delta(g_{-1}),
    // |n| <= depth; partial degree sums may leave the window and return, so
    // the offset truncation happens only at the end
    for (const auto& beta : lowering_odd) {
        for (long n = -depth; n <= depth; ++n) {
            CharacterWindow next = state;
            for (const auto& [w, mult] : state.mult) {
                Weight nw = w.shifted(beta);
                nw.degree = w.degree.value_or(0) + n;
                next.mult[nw] += mult;
            }
            state = std::move(next);
        }
    }
    CharacterWindow out;
    for (const auto& [w, mult] : state.mult) {
        long d = w.degree.value_or(0);
        if (d >= dmin - depth && d <= dmax + depth) out.mult[w] = mult;
    }
    return out;
}

// --- g_1 invariants ------------------------------------------------------------------------

G1Invariants g1_invariants_window(const LoopWindow& lw, long op_range) {
    if (op_range < 0) raise("BadParameter", "operator range must be nonnegative");
    const EvaluationWindow& ev = lw.evaluation();
    const ModuleWindow& win = ev.window();
    if (!win.algebra->rs) raise("BadParameter", "algebra carries no root system");
    const RootSystem& rs = *win.algebra->rs;
    if (!rs.is_type_I()) raise("NotTypeI", rs.family.label() + " is not of type I");

    auto grading = distinguished_grading(rs);
    std::vector<GenKey> raising_odd;
    for (const auto& rd : rs.roots)
        if (rd.parity == Parity::odd && grading[rd.coords] == 1)
            raising_odd.push_back(GenKey::of_root(rd.coords));

    long safe = lw.radius() - op_range;
    if (safe < 0) raise("WindowTooSmall", "operator range exceeds the t-window");

    // the constraint on v (x) t^n is degree-independent inside the safe
    // interior: (x_beta (x) t^s)(v (x) t^n) = ((x_beta (x) t^s) v) (x) t^{n+s}
    long kernel_dim = 0;
    for (const auto& [w, list] : ev.entries()) {
        if (!win.complete_at(w)) continue;
        long sd = ev.dim_at(w);
        std::vector<std::vector<Cyclotomic>> rows;
        for (const auto& gk : raising_odd) {
            for (long s = -op_range; s <= op_range; ++s) {
                auto blk = ev.act_block(gk, s, w);
                if (!blk.has_value()) continue;
                for (size_t r = 0; r < blk->rows(); ++r) {
                    std::vector<Cyclotomic> row(sd);
                    for (long c = 0; c < sd; ++c) row[c] = blk->at(r, c);
                    rows.push_back(std::move(row));
                }
            }
        }
        Matrix sys(rows.size(), sd);
        for (size_t r = 0; r < rows.size(); ++r)
            for (long c = 0; c < sd; ++c) sys.at(r, c) = rows[r][c];
        kernel_dim += static_cast<long>(sys.kernel_basis().size());
    }

    G1Invariants out;
    for (long n = -safe; n <= safe; ++n) {
        out.dim_per_degree[n] = kernel_dim;
        out.total += kernel_dim;
    }
    return out;
}

} // namespace sw
