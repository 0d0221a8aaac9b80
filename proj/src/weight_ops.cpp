#include "superweight/errors.hpp"
#include "superweight/weight_modules.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace sw {

std::string verdict_name(SimpleVerdict v) {
    switch (v) {
        case SimpleVerdict::simple: return "simple";
        case SimpleVerdict::not_simple: return "not_simple";
        case SimpleVerdict::window_evidence: return "window_evidence";
    }
    return "?";
}

namespace {

Weight combine_sum(const Weight& a, const Weight& b) {
    Weight w;
    w.coords = a.coords;
    for (size_t i = 0; i < b.coords.size(); ++i) w.coords[i] += b.coords[i];
    return w;
}

Weight combine_concat(const Weight& a, const Weight& b) {
    Weight w;
    w.coords = a.coords;
    w.coords.insert(w.coords.end(), b.coords.begin(), b.coords.end());
    return w;
}

struct PairLayout {
    struct Entry {
        Weight w1, w2;
        long i1, i2;
        Parity p1, p2;
    };
    std::map<Weight, std::vector<Entry>> entries;
    std::map<Weight, std::map<std::tuple<Weight, long, Weight, long>, long>> index;

    long find(const Weight& nu, const Weight& w1, long i1, const Weight& w2, long i2) const {
        auto it = index.find(nu);
        if (it == index.end()) return -1;
        auto jt = it->second.find({w1, i1, w2, i2});
        return jt == it->second.end() ? -1 : jt->second;
    }
};

PairLayout build_pair_layout(const ModuleWindow& a, const ModuleWindow& b, bool concat) {
    PairLayout lay;
    for (const auto& [w1, ps1] : a.spaces)
        for (const auto& [w2, ps2] : b.spaces) {
            Weight nu = concat ? combine_concat(w1, w2) : combine_sum(w1, w2);
            auto& list = lay.entries[nu];
            for (size_t i = 0; i < ps1.size(); ++i)
                for (size_t j = 0; j < ps2.size(); ++j)
                    list.push_back({w1, w2, static_cast<long>(i), static_cast<long>(j),
                                    ps1[i], ps2[j]});
        }
    for (auto& [nu, list] : lay.entries) {
        std::sort(list.begin(), list.end(), [](const auto& x, const auto& y) {
            if (!(x.w1 == y.w1)) return x.w1 < y.w1;
            if (x.i1 != y.i1) return x.i1 < y.i1;
            if (!(x.w2 == y.w2)) return x.w2 < y.w2;
            return x.i2 < y.i2;
        });
        for (size_t c = 0; c < list.size(); ++c)
            lay.index[nu][{list[c].w1, list[c].i1, list[c].w2, list[c].i2}] =
                static_cast<long>(c);
    }
    return lay;
}

SupportSet merge_supports(const ModuleWindow& a, const ModuleWindow& b,
                          const std::map<Weight, std::vector<Parity>>& spaces, bool concat) {
    SupportSet s;
    if (a.support && b.support) {
        bool coset = a.support->kind == SupportSet::Kind::coset ||
                     b.support->kind == SupportSet::Kind::coset;
        s.kind = coset ? SupportSet::Kind::coset : SupportSet::Kind::finite;
        for (const auto& x : a.support->base)
            for (const auto& y : b.support->base)
                s.base.push_back(concat ? combine_concat(x, y) : combine_sum(x, y));
        std::sort(s.base.begin(), s.base.end());
        s.base.erase(std::unique(s.base.begin(), s.base.end(),
                                 [](const Weight& u, const Weight& v) { return u == v; }),
                     s.base.end());
        auto pad = [&](const RootVector& r, bool left, size_t total) {
            if (!concat) return r;
            RootVector v(total, 0);
            size_t off = left ? 0 : total - r.size();
            for (size_t i = 0; i < r.size(); ++i) v[off + i] = r[i];
            return v;
        };
        size_t total = concat ? a.algebra->coord_dim + b.algebra->coord_dim
                              : a.algebra->coord_dim;
        for (const auto& d : a.support->directions) s.directions.push_back(pad(d, true, total));
        for (const auto& d : b.support->directions) s.directions.push_back(pad(d, false, total));
        std::sort(s.directions.begin(), s.directions.end());
        s.directions.erase(std::unique(s.directions.begin(), s.directions.end()),
                           s.directions.end());
    } else {
        s.kind = SupportSet::Kind::finite;
        for (const auto& [w, ps] : spaces) s.base.push_back(w);
    }
    return s;
}

// Shared assembly: act is called with (gen index in `gens`, layout entry,
// target accumulation callback).
ModuleWindow assemble_tensor(const ModuleWindow& a, const ModuleWindow& b,
                             const AlgebraPtr& out_alg, bool concat, bool diagonal) {
    PairLayout lay = build_pair_layout(a, b, concat);
    ModuleWindow m;
    m.algebra = out_alg;
    m.completeness = (a.total() && b.total()) ? ModuleWindow::Completeness::total
                                              : ModuleWindow::Completeness::windowed;
    for (const auto& [nu, list] : lay.entries) {
        std::vector<Parity> ps;
        for (const auto& en : list) ps.push_back(parity_sum(en.p1, en.p2));
        m.spaces[nu] = ps;
    }

    size_t a_gens = a.algebra->size();
    for (size_t gi = 0; gi < out_alg->size(); ++gi) {
        const auto& gen = out_alg->gens[gi];
        if (gen.key.kind == GenKind::cartan) continue;
        // which slots does this generator touch?
        bool on_first, on_second;
        GenKey key1, key2;
        if (diagonal) {
            on_first = on_second = true;
            key1 = key2 = gen.key;
        } else {
            on_first = gi < a_gens;
            on_second = !on_first;
            if (on_first) key1 = a.algebra->gens[gi].key;
            else key2 = b.algebra->gens[gi - a_gens].key;
        }
        bool gen_odd = gen.parity == Parity::odd;

        std::map<Weight, Matrix> blocks;
        for (const auto& [nu, list] : lay.entries) {
            RootVector shift = gen.weight;
            Weight tnu = nu.shifted(shift);
            auto tit = lay.entries.find(tnu);
            if (tit == lay.entries.end()) continue;
            Matrix blk(tit->second.size(), list.size());
            bool nonzero = false;
            for (size_t c = 0; c < list.size(); ++c) {
                const auto& en = list[c];
                if (on_first) {
                    Matrix A = a.action_block(key1, en.w1);
                    Weight tw1 = a.target_weight(key1, en.w1);
                    for (size_t r = 0; r < A.rows(); ++r) {
                        if (A.at(r, en.i1).is_zero()) continue;
                        long pos = lay.find(tnu, tw1, static_cast<long>(r), en.w2, en.i2);
                        if (pos < 0) continue;
                        blk.at(pos, c) += A.at(r, en.i1);
                        nonzero = true;
                    }
                }
                if (on_second) {
                    Matrix B = b.action_block(key2, en.w2);
                    Weight tw2 = b.target_weight(key2, en.w2);
                    Cyclotomic sign((gen_odd && en.p1 == Parity::odd) ? -1 : 1);
                    for (size_t r = 0; r < B.rows(); ++r) {
                        if (B.at(r, en.i2).is_zero()) continue;
                        long pos = lay.find(tnu, en.w1, en.i1, tw2, static_cast<long>(r));
                        if (pos < 0) continue;
                        blk.at(pos, c) += sign * B.at(r, en.i2);
                        nonzero = true;
                    }
                }
            }
            if (nonzero) blocks[nu] = std::move(blk);
        }
        if (!blocks.empty()) m.actions[gen.key] = std::move(blocks);
    }
    m.support = merge_supports(a, b, m.spaces, concat);
    // a combined weight is a frontier weight when any contributing factor
    // pair touches a factor frontier
    for (const auto& [nu, list] : lay.entries)
        for (const auto& en : list) {
            if (a.frontier.count(en.w1) || b.frontier.count(en.w2)) {
                m.frontier.insert(nu);
                break;
            }
        }
    return m;
}

} // namespace

ModuleWindow tensor(const ModuleWindow& a, const ModuleWindow& b) {
    if (a.algebra->name != b.algebra->name)
        raise("AlgebraMismatch", "diagonal tensor needs a common algebra, got " +
                                     a.algebra->name + " and " + b.algebra->name);
    return assemble_tensor(a, b, a.algebra, /*concat=*/false, /*diagonal=*/true);
}

ModuleWindow outer_tensor(const ModuleWindow& a, const ModuleWindow& b) {
    AlgebraPtr sum = make_sum(a.algebra, b.algebra);
    return assemble_tensor(a, b, sum, /*concat=*/true, /*diagonal=*/false);
}

// --- endomorphisms ----------------------------------------------------------

namespace {

std::optional<Cyclotomic> field_sqrt(const Cyclotomic& c) {
    if (!c.is_rational()) return std::nullopt;
    Rational r = c.rational_part();
    if (r.sign() < 0) return std::nullopt;
    mpz_class num = r.numerator(), den = r.denominator();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        mpz_class sn, sd;
        mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
        return Cyclotomic(Rational(mpq_class(sn, sd)));
    }
    return std::nullopt;
}

struct EndoVars {
    // variable = same-weight matrix entry (w, row, col) with the parity rule
    std::vector<std::tuple<Weight, long, long>> vars;
    std::map<Weight, std::map<std::pair<long, long>, long>> lookup;
};

EndoVars enumerate_vars(const ModuleWindow& m, bool odd_map) {
    EndoVars ev;
    for (const auto& [w, ps] : m.spaces) {
        long d = static_cast<long>(ps.size());
        for (long r = 0; r < d; ++r)
            for (long c = 0; c < d; ++c) {
                bool same = ps[r] == ps[c];
                if (same == odd_map) continue;
                ev.lookup[w][{r, c}] = static_cast<long>(ev.vars.size());
                ev.vars.push_back({w, r, c});
            }
    }
    return ev;
}

// Kernel of the supercommutation system for maps of the given parity.
std::vector<std::vector<Cyclotomic>> endo_kernel(const ModuleWindow& m, bool odd_map) {
    EndoVars ev = enumerate_vars(m, odd_map);
    if (ev.vars.empty()) return {};
    std::vector<std::vector<Cyclotomic>> rows;
    for (const auto& [gk, blocks] : m.actions) {
        const auto& gen = m.algebra->gens[m.algebra->index_of(gk)];
        bool gen_odd = gen.parity == Parity::odd;
        Cyclotomic sign((odd_map && gen_odd) ? -1 : 1);
        for (const auto& [w, ps] : m.spaces) {
            Weight tw = m.target_weight(gk, w);
            if (!m.has_weight(tw)) continue;
            Matrix A = m.action_block(gk, w);
            long td = m.dim_at(tw), sd = m.dim_at(w);
            for (long i = 0; i < td; ++i)
                for (long j = 0; j < sd; ++j) {
                    std::vector<Cyclotomic> row(ev.vars.size(), Cyclotomic());
                    bool any = false;
                    // sum_k Phi_t[i,k] A[k,j]
                    for (long k = 0; k < td; ++k) {
                        if (A.at(k, j).is_zero()) continue;
                        auto it = ev.lookup[tw].find({i, k});
                        if (it == ev.lookup[tw].end()) continue;
                        row[it->second] += A.at(k, j);
                        any = true;
                    }
                    // - sign * sum_k A[i,k] Phi_s[k,j]
                    for (long k = 0; k < sd; ++k) {
                        if (A.at(i, k).is_zero()) continue;
                        auto it = ev.lookup[w].find({k, j});
                        if (it == ev.lookup[w].end()) continue;
                        row[it->second] -= sign * A.at(i, k);
                        any = true;
                    }
                    if (any) rows.push_back(std::move(row));
                }
        }
    }
    Matrix sys(rows.size(), ev.vars.size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < ev.vars.size(); ++c) sys.at(r, c) = rows[r][c];
    return sys.kernel_basis();
}

std::map<Weight, Matrix> vars_to_blocks(const ModuleWindow& m, bool odd_map,
                                        const std::vector<Cyclotomic>& sol) {
    EndoVars ev = enumerate_vars(m, odd_map);
    std::map<Weight, Matrix> blocks;
    for (const auto& [w, ps] : m.spaces)
        blocks.emplace(w, Matrix(ps.size(), ps.size()));
    for (size_t v = 0; v < ev.vars.size(); ++v) {
        auto [w, r, c] = ev.vars[v];
        blocks.at(w).at(r, c) = sol[v];
    }
    return blocks;
}

} // namespace

EndoBasis endomorphisms(const ModuleWindow& m) {
    if (!m.total())
        raise("PreconditionViolated", "endomorphisms requires a total module window");
    EndoBasis eb;
    auto even_kernel = endo_kernel(m, false);
    eb.dim_even = static_cast<long>(even_kernel.size());
    auto odd_kernel = endo_kernel(m, true);
    eb.dim_odd = static_cast<long>(odd_kernel.size());
    if (eb.dim_odd == 1) {
        auto sol = odd_kernel[0];
        // canonical scale: first nonzero coordinate = 1
        for (const auto& x : sol)
            if (!x.is_zero()) {
                Cyclotomic inv = x.inverse();
                for (auto& y : sol) y *= inv;
                break;
            }
        auto blocks = vars_to_blocks(m, true, sol);
        // sigma^2 must be a scalar; normalize it to +-1 when a square root
        // exists in the field
        Cyclotomic c;
        bool first = true;
        for (const auto& [w, blk] : blocks) {
            Matrix sq = blk * blk;
            for (size_t i = 0; i < sq.rows(); ++i)
                for (size_t j = 0; j < sq.cols(); ++j) {
                    if (i == j) {
                        if (first) { c = sq.at(i, i); first = false; }
                        else if (!(sq.at(i, i) == c))
                            raise("PreconditionViolated", "sigma^2 is not scalar");
                    } else if (!sq.at(i, j).is_zero()) {
                        raise("PreconditionViolated", "sigma^2 is not scalar");
                    }
                }
        }
        int sq_sign = 0;
        Cyclotomic scale(1);
        if (auto s = field_sqrt(c)) {
            scale = s->inverse();
            sq_sign = 1;
        } else if (auto s2 = field_sqrt(-c)) {
            scale = s2->inverse();
            sq_sign = -1;
        } else {
            raise("PreconditionViolated", "cannot normalize sigma^2 = " + c.str());
        }
        for (auto& [w, blk] : blocks) blk = blk.scaled(scale);
        eb.sigma = std::move(blocks);
        eb.sigma_square_sign = sq_sign;
    }
    return eb;
}

// --- irreducible tensor product ----------------------------------------------

IrreducibleTensor irreducible_tensor(const ModuleWindow& a, const ModuleWindow& b) {
    if (!a.total() || !b.total())
        raise("FactorNotSimple", "factors must be total simple modules");
    if (simplicity_check(a).verdict != SimpleVerdict::simple ||
        simplicity_check(b).verdict != SimpleVerdict::simple)
        raise("FactorNotSimple", "factor failed the simplicity check");

    EndoBasis ea = endomorphisms(a), eb = endomorphisms(b);
    ModuleWindow full = outer_tensor(a, b);
    if (ea.dim_odd == 0 || eb.dim_odd == 0)
        return {std::move(full), TensorTag::whole};

    // normalize sigma_a^2 = +id and sigma_b^2 = -id
    auto sa = *ea.sigma;
    auto sb = *eb.sigma;
    Cyclotomic i4 = Cyclotomic::zeta(4);
    if (ea.sigma_square_sign == -1)
        for (auto& [w, blk] : sa) blk = blk.scaled(i4);
    if (eb.sigma_square_sign == 1)
        for (auto& [w, blk] : sb) blk = blk.scaled(i4);

    // Sigma(v (x) w) = (-1)^{|v|} sigma_a v (x) sigma_b w commutes with the
    // action and squares to the identity; its eigenspaces are submodules.
    PairLayout lay = build_pair_layout(a, b, /*concat=*/true);
    std::map<Weight, Matrix> Sigma;
    for (const auto& [nu, list] : lay.entries) {
        Matrix S(list.size(), list.size());
        for (size_t c = 0; c < list.size(); ++c) {
            const auto& en = list[c];
            const Matrix& A = sa.at(en.w1);
            const Matrix& B = sb.at(en.w2);
            Cyclotomic sign(en.p1 == Parity::odd ? -1 : 1);
            for (size_t r1 = 0; r1 < A.rows(); ++r1) {
                if (A.at(r1, en.i1).is_zero()) continue;
                for (size_t r2 = 0; r2 < B.rows(); ++r2) {
                    if (B.at(r2, en.i2).is_zero()) continue;
                    long pos = lay.find(nu, en.w1, static_cast<long>(r1), en.w2,
                                        static_cast<long>(r2));
                    if (pos < 0) raise("PreconditionViolated", "internal: Sigma layout");
                    S.at(pos, c) += sign * A.at(r1, en.i1) * B.at(r2, en.i2);
                }
            }
        }
        Matrix sq = S * S;
        for (size_t i = 0; i < sq.rows(); ++i)
            for (size_t j = 0; j < sq.cols(); ++j)
                if (!(sq.at(i, j) == (i == j ? Cyclotomic(1) : Cyclotomic())))
                    raise("PreconditionViolated", "internal: Sigma^2 != id");
        Sigma.emplace(nu, std::move(S));
    }

    // +1 eigenspace, weight by weight (parity-homogeneous kernels)
    ModuleWindow half;
    half.algebra = full.algebra;
    half.completeness = ModuleWindow::Completeness::total;
    std::map<Weight, std::vector<std::vector<Cyclotomic>>> plus_basis, minus_basis;
    for (const auto& [nu, ps] : full.spaces) {
        const Matrix& S = Sigma.at(nu);
        long d = static_cast<long>(ps.size());
        std::vector<Parity> half_parities;
        for (Parity p : {Parity::even, Parity::odd}) {
            std::vector<long> idx;
            for (long i = 0; i < d; ++i)
                if (ps[i] == p) idx.push_back(i);
            if (idx.empty()) continue;
            for (int sgn : {+1, -1}) {
                Matrix sub(idx.size(), idx.size());
                for (size_t r = 0; r < idx.size(); ++r)
                    for (size_t c = 0; c < idx.size(); ++c) {
                        sub.at(r, c) = S.at(idx[r], idx[c]);
                        if (r == c) sub.at(r, c) -= Cyclotomic(sgn);
                    }
                for (const auto& kv : sub.kernel_basis()) {
                    std::vector<Cyclotomic> v(d, Cyclotomic());
                    for (size_t k = 0; k < idx.size(); ++k) v[idx[k]] = kv[k];
                    if (sgn > 0) {
                        plus_basis[nu].push_back(std::move(v));
                        half_parities.push_back(p);
                    } else {
                        minus_basis[nu].push_back(std::move(v));
                    }
                }
            }
        }
        if (!plus_basis[nu].empty()) half.spaces[nu] = half_parities;
    }

    // restrict the action to the +1 eigenspace
    for (const auto& [gk, blocks] : full.actions) {
        std::map<Weight, Matrix> rblocks;
        for (const auto& [nu, bas] : plus_basis) {
            if (bas.empty()) continue;
            Weight tnu = full.target_weight(gk, nu);
            auto tit = plus_basis.find(tnu);
            if (tit == plus_basis.end() || tit->second.empty()) continue;
            Matrix A = full.action_block(gk, nu);
            // solve [target basis] * x = A * v for each source basis vector
            Matrix tb(full.dim_at(tnu), tit->second.size());
            for (size_t c = 0; c < tit->second.size(); ++c)
                for (size_t r = 0; r < tit->second[c].size(); ++r)
                    tb.at(r, c) = tit->second[c][r];
            Matrix blk(tit->second.size(), bas.size());
            bool nonzero = false;
            for (size_t c = 0; c < bas.size(); ++c) {
                auto img = A.apply(bas[c]);
                auto sol = tb.solve(img);
                if (!sol.has_value())
                    raise("PreconditionViolated", "internal: eigenspace not invariant");
                for (size_t r = 0; r < sol->size(); ++r) {
                    blk.at(r, c) = (*sol)[r];
                    if (!(*sol)[r].is_zero()) nonzero = true;
                }
            }
            if (nonzero) rblocks[nu] = std::move(blk);
        }
        if (!rblocks.empty()) half.actions[gk] = std::move(rblocks);
    }
    SupportSet supp;
    supp.kind = SupportSet::Kind::finite;
    for (const auto& [w, ps] : half.spaces) supp.base.push_back(w);
    half.support = supp;

    // the two eigenspaces must be swapped bijectively by the odd
    // intertwiner T = sigma_a (x) 1, which supercommutes with the action
    std::map<Weight, Matrix> Tmap;
    for (const auto& [nu, list] : lay.entries) {
        Matrix T(full.dim_at(nu), full.dim_at(nu));
        for (size_t c = 0; c < list.size(); ++c) {
            const auto& en = list[c];
            const Matrix& A = sa.at(en.w1);
            for (size_t r1 = 0; r1 < A.rows(); ++r1) {
                if (A.at(r1, en.i1).is_zero()) continue;
                long pos = lay.find(nu, en.w1, static_cast<long>(r1), en.w2, en.i2);
                if (pos >= 0) T.at(pos, c) += A.at(r1, en.i1);
            }
        }
        Tmap.emplace(nu, std::move(T));
    }
    for (const auto& gen : full.algebra->gens) {
        if (gen.key.kind == GenKind::cartan) continue;
        Cyclotomic sign(gen.parity == Parity::odd ? -1 : 1);
        for (const auto& [nu, list] : lay.entries) {
            Weight tnu = full.target_weight(gen.key, nu);
            if (!full.has_weight(tnu)) continue;
            Matrix A = full.action_block(gen.key, nu);
            if (!(Tmap.at(tnu) * A == (A * Tmap.at(nu)).scaled(sign)))
                raise("PreconditionViolated", "internal: intertwiner fails to supercommute");
        }
    }
    for (const auto& [nu, bas] : plus_basis) {
        const auto& mbas = minus_basis[nu];
        if (bas.size() != mbas.size())
            raise("PreconditionViolated", "internal: eigenspace dimensions differ");
        if (bas.empty()) continue;
        const Matrix& T = Tmap.at(nu);
        Matrix mb(full.dim_at(nu), mbas.size());
        for (size_t c = 0; c < mbas.size(); ++c)
            for (size_t r = 0; r < mbas[c].size(); ++r) mb.at(r, c) = mbas[c][r];
        std::vector<std::vector<Cyclotomic>> images;
        for (const auto& v : bas) {
            auto img = T.apply(v);
            if (!mb.solve(img).has_value())
                raise("PreconditionViolated", "internal: intertwiner misses the -1 eigenspace");
            images.push_back(std::move(img));
        }
        if (span_rank(images) != bas.size())
            raise("PreconditionViolated", "internal: intertwiner not injective");
    }

    return {std::move(half), TensorTag::half};
}

// --- simplicity ---------------------------------------------------------------

namespace {

struct ClosureState {
    const ModuleWindow& m;
    std::map<Weight, SpanBuilder> spans;

    explicit ClosureState(const ModuleWindow& mod) : m(mod) {}

    SpanBuilder& builder(const Weight& w) {
        auto it = spans.find(w);
        if (it == spans.end())
            it = spans.emplace(w, SpanBuilder(m.dim_at(w))).first;
        return it->second;
    }

    void run(const Weight& w0, const std::vector<Cyclotomic>& v0) {
        std::vector<std::pair<Weight, std::vector<Cyclotomic>>> work;
        if (builder(w0).add(v0)) work.push_back({w0, v0});
        while (!work.empty()) {
            auto [w, v] = work.back();
            work.pop_back();
            for (const auto& gen : m.algebra->gens) {
                if (gen.key.kind == GenKind::cartan) continue;
                Weight tw = m.target_weight(gen.key, w);
                if (!m.has_weight(tw)) continue;
                auto img = m.action_block(gen.key, w).apply(v);
                bool zero = std::all_of(img.begin(), img.end(),
                                        [](const Cyclotomic& c) { return c.is_zero(); });
                if (zero) continue;
                if (builder(tw).add(img)) work.push_back({tw, img});
            }
        }
    }

    bool covers_all() {
        for (const auto& [w, ps] : m.spaces)
            if (builder(w).rank() != ps.size()) return false;
        return true;
    }

    bool covers(const std::vector<Weight>& ws) {
        for (const auto& w : ws)
            if (builder(w).rank() != static_cast<size_t>(m.dim_at(w))) return false;
        return true;
    }
};

bool lex_positive(const RootVector& v) {
    for (long x : v) {
        if (x > 0) return true;
        if (x < 0) return false;
    }
    return false;
}

} // namespace

SimplicityReport simplicity_check(const ModuleWindow& m) {
    SimplicityReport rep;
    if (m.dim() == 0) {
        rep.verdict = SimpleVerdict::not_simple;
        return rep;
    }

    if (!m.total()) {
        rep.verdict = SimpleVerdict::window_evidence;
        std::vector<Weight> interior, core;
        for (const auto& [w, ps] : m.spaces)
            if (m.is_interior(w)) interior.push_back(w);
        for (const auto& w : interior) {
            bool inner = true;
            for (const auto& gen : m.algebra->gens) {
                if (gen.key.kind == GenKind::cartan || rv_is_zero(gen.weight)) continue;
                if (!m.is_interior(w.shifted(gen.weight))) { inner = false; break; }
            }
            if (inner) core.push_back(w);
        }
        rep.window_cyclic = !interior.empty();
        for (const auto& w : interior) {
            long d = m.dim_at(w);
            for (long i = 0; i < d; ++i) {
                std::vector<Cyclotomic> v(d, Cyclotomic());
                v[i] = Cyclotomic(1);
                ClosureState cs(m);
                cs.run(w, v);
                if (!cs.covers(core)) {
                    rep.window_cyclic = false;
                    return rep;
                }
            }
        }
        return rep;
    }

    // total module: primitive space against a fixed (lex) positive system
    std::vector<GenKey> raising;
    for (const auto& gen : m.algebra->gens)
        if (gen.key.kind == GenKind::root && lex_positive(gen.weight))
            raising.push_back(gen.key);

    if (raising.empty()) {
        // rootless scope (the odd witness algebra): super Schur cuts first,
        // then homogeneous basis lines must be cyclic
        EndoBasis eb = endomorphisms(m);
        if (eb.dim_even > 1 || eb.dim_odd > 1) {
            rep.verdict = SimpleVerdict::not_simple;
            return rep;
        }
        for (const auto& [w, ps] : m.spaces) {
            for (size_t i = 0; i < ps.size(); ++i) {
                std::vector<Cyclotomic> v(ps.size(), Cyclotomic());
                v[i] = Cyclotomic(1);
                ClosureState cs(m);
                cs.run(w, v);
                if (!cs.covers_all()) {
                    rep.verdict = SimpleVerdict::not_simple;
                    return rep;
                }
            }
        }
        rep.verdict = SimpleVerdict::simple;
        return rep;
    }

    // primitive vectors: joint kernel of the raising actions, weight by weight
    long prim_dim = 0;
    std::optional<std::pair<Weight, std::vector<Cyclotomic>>> prim_vec;
    for (const auto& [w, ps] : m.spaces) {
        long sd = static_cast<long>(ps.size());
        std::vector<std::vector<Cyclotomic>> rows;
        for (const auto& gk : raising) {
            Weight tw = m.target_weight(gk, w);
            if (!m.has_weight(tw)) continue;
            Matrix A = m.action_block(gk, w);
            for (size_t r = 0; r < A.rows(); ++r) {
                std::vector<Cyclotomic> row(sd);
                for (long c = 0; c < sd; ++c) row[c] = A.at(r, c);
                rows.push_back(std::move(row));
            }
        }
        Matrix sys(rows.size(), sd);
        for (size_t r = 0; r < rows.size(); ++r)
            for (long c = 0; c < sd; ++c) sys.at(r, c) = rows[r][c];
        auto ker = sys.kernel_basis();
        prim_dim += static_cast<long>(ker.size());
        if (!ker.empty() && !prim_vec) prim_vec = {w, ker[0]};
    }
    rep.primitive_dim = prim_dim;
    if (prim_dim != 1) {
        rep.verdict = SimpleVerdict::not_simple;
        return rep;
    }
    ClosureState cs(m);
    cs.run(prim_vec->first, prim_vec->second);
    rep.verdict = cs.covers_all() ? SimpleVerdict::simple : SimpleVerdict::not_simple;
    return rep;
}

// --- shadows -------------------------------------------------------------------

ShadowPartition shadow_of_module(const ModuleWindow& m) {
    if (!m.algebra->rs)
        raise("AmbiguousSupport", "module algebra carries no root system");
    const RootSystem& rs = *m.algebra->rs;
    if (m.total()) {
        // every root acts nilpotently on a finite box; inj is empty
        return shadow_from_inj(rs, {});
    }
    if (!m.support)
        raise("AmbiguousSupport", "windowed module carries no symbolic support");
    std::vector<RootVector> inj;
    for (const auto& rd : rs.roots)
        if (classify_string(*m.support, rd.coords) == StringClass::i) inj.push_back(rd.coords);
    return shadow_from_inj(rs, inj);
}

// --- induced characters ----------------------------------------------------------

namespace {

bool in_integer_lattice(const std::vector<RootVector>& gens, std::vector<mpz_class> target) {
    size_t dim = target.size();
    // integer row echelon (Hermite-style) of the generator rows
    std::vector<std::vector<mpz_class>> rows;
    for (const auto& g : gens) {
        std::vector<mpz_class> r;
        for (long x : g) r.emplace_back(x);
        rows.push_back(std::move(r));
    }
    size_t rank_rows = 0;
    for (size_t col = 0; col < dim; ++col) {
        // gcd-combine all rows below rank_rows on this column
        size_t pivot = rows.size();
        for (size_t r = rank_rows; r < rows.size(); ++r)
            if (rows[r][col] != 0) { pivot = r; break; }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank_rows], rows[pivot]);
        for (size_t r = rank_rows + 1; r < rows.size(); ++r) {
            while (rows[r][col] != 0) {
                mpz_class q = rows[rank_rows][col] / rows[r][col];
                for (size_t c = 0; c < dim; ++c) rows[rank_rows][c] -= q * rows[r][c];
                std::swap(rows[rank_rows], rows[r]);
            }
        }
        ++rank_rows;
    }
    rows.resize(rank_rows);
    // reduce the target against the echelon rows
    for (const auto& r : rows) {
        size_t lead = 0;
        while (lead < dim && r[lead] == 0) ++lead;
        if (lead == dim) continue;
        if (target[lead] % r[lead] != 0) continue;
        mpz_class q = target[lead] / r[lead];
        for (size_t c = 0; c < dim; ++c) target[c] -= q * r[c];
    }
    return std::all_of(target.begin(), target.end(), [](const mpz_class& x) { return x == 0; });
}

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

CharacterWindow induced_character(const RootSystem& rs, const TriangularDecomposition& T,
                                  const CharacterWindow& charW, long a_dim, long depth) {
    if (a_dim < 1) raise("BadParameter", "A dimension must be positive");
    if (charW.mult.empty()) return {};
    // support must sit in a single coset of the zero-part root lattice
    const Weight& base = charW.mult.begin()->first;
    for (const auto& [w, mult] : charW.mult) {
        std::vector<mpz_class> diff;
        for (size_t i = 0; i < w.coords.size(); ++i) {
            Cyclotomic d = w.coords[i] - base.coords[i];
            if (!d.is_rational() || !d.rational_part().is_integer())
                raise("CosetViolation", "support weights differ by a non-integral vector");
            diff.emplace_back(d.rational_part().numerator());
        }
        if (!in_integer_lattice(T.zero, diff))
            raise("CosetViolation",
                  "inducing character is not supported on a single coset of the zero lattice");
    }

    // state: weight -> lowering-step count -> multiplicity
    std::map<Weight, std::map<long, long>> state;
    for (const auto& [w, mult] : charW.mult) state[w][0] = mult;

    for (const auto& alpha : T.minus) {
        Parity p = *rs.parity_of(alpha);
        std::map<Weight, std::map<long, long>> next;
        for (const auto& [w, by_cost] : state) {
            for (const auto& [cost, mult] : by_cost) {
                long kmax = p == Parity::even ? depth - cost : std::min(a_dim, depth - cost);
                for (long k = 0; k <= kmax; ++k) {
                    long coef = p == Parity::even ? binom(k + a_dim - 1, a_dim - 1)
                                                  : binom(a_dim, k);
                    if (coef == 0) continue;
                    next[w.shifted(alpha, k)][cost + k] += mult * coef;
                }
            }
        }
        state = std::move(next);
    }

    CharacterWindow out;
    for (const auto& [w, by_cost] : state) {
        long total = 0;
        for (const auto& [cost, mult] : by_cost) total += mult;
        if (total != 0) out.mult[w] = total;
    }
    return out;
}

// --- invariants -------------------------------------------------------------------

std::map<Weight, std::vector<std::vector<Cyclotomic>>> invariants_subspace(
    const ModuleWindow& m, const std::vector<RootVector>& root_subset) {
    std::map<Weight, std::vector<std::vector<Cyclotomic>>> out;
    for (const auto& [w, ps] : m.spaces) {
        long sd = static_cast<long>(ps.size());
        std::vector<std::vector<Cyclotomic>> rows;
        for (const auto& alpha : root_subset) {
            GenKey gk = GenKey::of_root(alpha);
            Weight tw = w.shifted(alpha);
            if (!m.total() && !m.has_weight(tw)) continue;
            Matrix A = m.action_block(gk, w);
            for (size_t r = 0; r < A.rows(); ++r) {
                std::vector<Cyclotomic> row(sd);
                for (long c = 0; c < sd; ++c) row[c] = A.at(r, c);
                rows.push_back(std::move(row));
            }
        }
        Matrix sys(rows.size(), sd);
        for (size_t r = 0; r < rows.size(); ++r)
            for (long c = 0; c < sd; ++c) sys.at(r, c) = rows[r][c];
        auto ker = sys.kernel_basis();
        if (!ker.empty()) out[w] = std::move(ker);
    }
    return out;
}

long invariants_dimension(const ModuleWindow& m, const std::vector<RootVector>& root_subset) {
    long d = 0;
    for (const auto& [w, basis] : invariants_subspace(m, root_subset))
        d += static_cast<long>(basis.size());
    return d;
}

} // namespace sw
