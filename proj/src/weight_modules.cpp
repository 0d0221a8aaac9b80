#include "superweight/weight_modules.hpp"

#include "superweight/errors.hpp"

#include <algorithm>
#include <functional>

namespace sw {

long ModuleWindow::dim() const {
    long d = 0;
    for (const auto& [w, ps] : spaces) d += static_cast<long>(ps.size());
    return d;
}

long ModuleWindow::dim_at(const Weight& w) const {
    auto it = spaces.find(w);
    return it == spaces.end() ? 0 : static_cast<long>(it->second.size());
}

Weight ModuleWindow::target_weight(const GenKey& g, const Weight& w) const {
    if (g.kind == GenKind::root) return w.shifted(g.root);
    return w;
}

bool ModuleWindow::gen_acts(const GenKey& g) const {
    if (!acting.has_value()) return true;
    if (g.kind == GenKind::cartan) return true;
    return std::find(acting->begin(), acting->end(), g) != acting->end();
}

Matrix ModuleWindow::action_block(const GenKey& g, const Weight& w) const {
    long src = dim_at(w);
    if (g.kind == GenKind::cartan) {
        const auto& gen = algebra->gens[algebra->index_of(g)];
        Matrix m(src, src);
        Cyclotomic v = w.eval(gen.cartan_coords);
        for (long i = 0; i < src; ++i) m.at(i, i) = v;
        return m;
    }
    auto it = actions.find(g);
    if (it != actions.end()) {
        auto bt = it->second.find(w);
        if (bt != it->second.end()) return bt->second;
    }
    Weight tw = target_weight(g, w);
    return Matrix(static_cast<size_t>(dim_at(tw)), static_cast<size_t>(src));
}

bool ModuleWindow::is_interior(const Weight& w) const {
    if (!has_weight(w)) return false;
    if (total()) return true;
    if (!complete_at(w)) return false;
    for (const auto& gen : algebra->gens) {
        if (gen.key.kind == GenKind::cartan) continue;
        if (rv_is_zero(gen.weight)) continue;
        if (!has_weight(w.shifted(gen.weight))) return false;
    }
    return true;
}

CharacterWindow ModuleWindow::character() const {
    CharacterWindow cw;
    for (const auto& [w, ps] : spaces) cw.mult[w] = static_cast<long>(ps.size());
    return cw;
}

ModuleWindow module_direct_sum(const ModuleWindow& a, const ModuleWindow& b) {
    if (a.algebra->name != b.algebra->name)
        raise("AlgebraMismatch", "direct sum needs a common algebra");
    ModuleWindow m;
    m.algebra = a.algebra;
    m.completeness = (a.total() && b.total()) ? ModuleWindow::Completeness::total
                                              : ModuleWindow::Completeness::windowed;
    std::map<Weight, long> offset;
    for (const auto& [w, ps] : a.spaces) {
        m.spaces[w] = ps;
        offset[w] = static_cast<long>(ps.size());
    }
    for (const auto& [w, ps] : b.spaces) {
        auto& dst = m.spaces[w];
        if (!offset.count(w)) offset[w] = 0;
        dst.insert(dst.end(), ps.begin(), ps.end());
    }
    auto place = [&](const ModuleWindow& src, bool second) {
        for (const auto& [g, blocks] : src.actions) {
            for (const auto& [w, blk] : blocks) {
                Weight tw = src.target_weight(g, w);
                Matrix& dst = m.actions[g]
                                  .try_emplace(w, Matrix(static_cast<size_t>(m.dim_at(tw)),
                                                         static_cast<size_t>(m.dim_at(w))))
                                  .first->second;
                long roff = second ? offset.count(tw) ? offset[tw] : 0 : 0;
                long coff = second ? offset.count(w) ? offset[w] : 0 : 0;
                for (size_t i = 0; i < blk.rows(); ++i)
                    for (size_t j = 0; j < blk.cols(); ++j)
                        dst.at(i + roff, j + coff) = blk.at(i, j);
            }
        }
    };
    place(a, false);
    place(b, true);
    return m;
}

// ---------------------------------------------------------------------------
// Highest-weight construction

namespace {

// Words in the lowering generators, kept in normal order.
struct HWSpace {
    std::vector<Word> monomials;
    Matrix constraints;            // raising words x monomials
    std::vector<size_t> basis_cols;
    Matrix basis_matrix;           // constraints restricted to basis columns
    std::vector<Parity> parities;

    long qdim() const { return static_cast<long>(basis_cols.size()); }

    // coordinates of a monomial-vector modulo the maximal submodule
    std::vector<Cyclotomic> expand(const std::vector<Cyclotomic>& v) const {
        if (qdim() == 0) return {};
        auto rhs = constraints.apply(v);
        auto sol = basis_matrix.solve(rhs);
        if (!sol.has_value()) raise("BadParameter", "internal: quotient expansion failed");
        return *sol;
    }
};

struct HWBuilder {
    AlgebraPtr g;
    UEA uea;
    Weight lambda;

    explicit HWBuilder(AlgebraPtr alg, Weight lam)
        : g(std::move(alg)), uea(g), lambda(std::move(lam)) {}

    Weight weight_of_word(const Word& w) const {
        Weight res = lambda;
        for (int idx : w) res = res.shifted(g->gens[idx].weight);
        return res;
    }

    Parity parity_of_word(const Word& w) const {
        int odd = 0;
        for (int idx : w)
            if (g->is_odd(idx)) ++odd;
        return odd % 2 ? Parity::odd : Parity::even;
    }

    // All exponent words over the given generator indices with odd caps 1.
    std::vector<Word> exponent_words(const std::vector<int>& gens,
                                     const std::vector<long>& caps) const {
        std::vector<Word> words{{}};
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            long cap = g->is_odd(gens[gi]) ? std::min(caps[gi], 1L) : caps[gi];
            std::vector<Word> next;
            for (const auto& w : words)
                for (long k = 0; k <= cap; ++k) {
                    Word nw = w;
                    nw.insert(nw.end(), k, gens[gi]);
                    next.push_back(std::move(nw));
                }
            words = std::move(next);
        }
        return words;
    }

    // Apply a UEA element to the highest vector: raising kills, Cartans
    // evaluate at lambda, lowering words index the Verma basis.
    std::map<Word, Cyclotomic> project(const UEAElt& e) const {
        std::map<Word, Cyclotomic> out;
        for (const auto& [w, c] : e) {
            Cyclotomic coef = c;
            // letters act right to left; any raising letter reaches the
            // highest vector first and kills the term
            bool has_raising = false;
            for (int idx : w)
                if (idx >= g->raising_begin) { has_raising = true; break; }
            if (has_raising) continue;
            // trailing Cartan letters evaluate at lambda
            size_t pos = w.size();
            while (pos > 0 && w[pos - 1] >= g->lowering_end) {
                const auto& gen = g->gens[w[pos - 1]];
                coef *= lambda.eval(gen.cartan_coords);
                --pos;
            }
            if (coef.is_zero()) continue;
            Word mono(w.begin(), w.begin() + pos);
            auto it = out.find(mono);
            if (it == out.end()) out.emplace(std::move(mono), coef);
            else {
                it->second += coef;
                if (it->second.is_zero()) out.erase(it);
            }
        }
        return out;
    }
};

ModuleWindow build_highest_weight(const AlgebraPtr& alg, const Weight& lambda,
                                  const std::vector<long>& lowering_caps,
                                  const std::vector<long>& raising_caps) {
    HWBuilder b(alg, lambda);
    std::vector<int> lowering, raising;
    for (int i = 0; i < alg->lowering_end; ++i) lowering.push_back(i);
    for (int i = alg->raising_begin; i < static_cast<int>(alg->size()); ++i) raising.push_back(i);

    // enumerate Verma monomials per weight
    std::map<Weight, std::vector<Word>> monos;
    for (auto& w : b.exponent_words(lowering, lowering_caps)) {
        std::sort(w.begin(), w.end());
        monos[b.weight_of_word(w)].push_back(w);
    }
    for (auto& [wt, list] : monos) std::sort(list.begin(), list.end());

    // raising words grouped by their weight
    std::map<RootVector, std::vector<Word>> raisers;
    for (auto& w : b.exponent_words(raising, raising_caps)) {
        std::sort(w.begin(), w.end());
        RootVector delta(alg->coord_dim, 0);
        for (int idx : w) delta = rv_add(delta, alg->gens[idx].weight);
        raisers[delta].push_back(w);
    }

    // constraint matrices and quotient bases
    std::map<Weight, HWSpace> spaces;
    for (const auto& [wt, list] : monos) {
        // climb = lambda - wt as a root vector (always integral here)
        RootVector climb(alg->coord_dim, 0);
        bool integral = true;
        for (long i = 0; i < alg->coord_dim; ++i) {
            Cyclotomic d = lambda.coords[i] - wt.coords[i];
            if (!d.is_rational() || !d.rational_part().is_integer()) { integral = false; break; }
            climb[i] = d.rational_part().to_long();
        }
        if (!integral) raise("BadParameter", "internal: non-integral weight ladder");
        auto rit = raisers.find(climb);
        std::vector<Word> rws = rit == raisers.end() ? std::vector<Word>{} : rit->second;

        HWSpace sp;
        sp.monomials = list;
        sp.constraints = Matrix(rws.size(), list.size());
        for (size_t r = 0; r < rws.size(); ++r)
            for (size_t c = 0; c < list.size(); ++c) {
                Word prod = rws[r];
                prod.insert(prod.end(), list[c].begin(), list[c].end());
                auto val = b.project(b.uea.normal_form(prod));
                auto vt = val.find(Word{});
                if (vt != val.end()) sp.constraints.at(r, c) = vt->second;
            }
        Matrix tmp = sp.constraints;
        sp.basis_cols = tmp.rref();
        sp.basis_matrix = Matrix(rws.size(), sp.basis_cols.size());
        for (size_t r = 0; r < rws.size(); ++r)
            for (size_t c = 0; c < sp.basis_cols.size(); ++c)
                sp.basis_matrix.at(r, c) = sp.constraints.at(r, sp.basis_cols[c]);
        // quotient dimension = #monomials - rank = #monomials - #pivots... the
        // pivots of the constraint matrix index monomials NOT in the radical
        // complement; the chosen basis classes are the pivot columns.
        for (size_t c : sp.basis_cols) sp.parities.push_back(b.parity_of_word(list[c]));
        spaces.emplace(wt, std::move(sp));
    }

    ModuleWindow m;
    m.algebra = alg;
    m.completeness = ModuleWindow::Completeness::total;
    for (const auto& [wt, sp] : spaces)
        if (sp.qdim() > 0) m.spaces[wt] = sp.parities;

    // action matrices on the quotient
    for (const auto& gen : alg->gens) {
        if (gen.key.kind == GenKind::cartan) continue;
        int gi = alg->index_of(gen.key);
        for (const auto& [wt, sp] : spaces) {
            if (sp.qdim() == 0) continue;
            Weight tw = wt.shifted(gen.weight);
            auto tit = spaces.find(tw);
            if (tit == spaces.end() || tit->second.qdim() == 0) continue;
            const HWSpace& target = tit->second;
            Matrix block(target.qdim(), sp.qdim());
            for (size_t c = 0; c < sp.basis_cols.size(); ++c) {
                const Word& mono = sp.monomials[sp.basis_cols[c]];
                Word prod{gi};
                prod.insert(prod.end(), mono.begin(), mono.end());
                auto img = b.project(b.uea.normal_form(prod));
                std::vector<Cyclotomic> v(target.monomials.size(), Cyclotomic());
                for (const auto& [mw, mc] : img) {
                    auto pos = std::lower_bound(target.monomials.begin(), target.monomials.end(), mw);
                    if (pos == target.monomials.end() || *pos != mw)
                        raise("BadParameter", "internal: image monomial outside the window");
                    v[static_cast<size_t>(pos - target.monomials.begin())] = mc;
                }
                auto coords = target.expand(v);
                for (long r = 0; r < target.qdim(); ++r) block.at(r, c) = coords[r];
            }
            if (!block.is_zero()) m.actions[gen.key][wt] = block;
        }
    }

    // drop empty weights from action targets
    SupportSet supp;
    supp.kind = SupportSet::Kind::finite;
    for (const auto& [w, ps] : m.spaces) supp.base.push_back(w);
    m.support = supp;
    return m;
}

Rational integral_value(const Cyclotomic& c, const std::string& what) {
    if (!c.is_rational() || !c.rational_part().is_integer())
        raise("NotDominantIntegral", what + " must be a nonnegative integer, got " + c.str());
    return c.rational_part();
}

} // namespace

ModuleWindow finite_simple_module(const AlgebraPtr& g, const Weight& lambda) {
    if (lambda.coords.size() != static_cast<size_t>(g->coord_dim))
        raise("DimensionMismatch", "weight dimension mismatch");
    if (g->name == "sl2") {
        Cyclotomic hv = lambda.coords[0] - lambda.coords[1];
        Rational n = integral_value(hv, "lambda(h)");
        if (n < Rational(0)) raise("NotDominantIntegral", "lambda(h) negative: " + hv.str());
        long nn = n.to_long();
        return build_highest_weight(g, lambda, {nn}, {nn});
    }
    if (g->name == "osp12") {
        Rational n = integral_value(lambda.coords[0], "lambda(h_{2delta})");
        if (n < Rational(0)) raise("NotDominantIntegral", "lambda(h) negative");
        long nn = n.to_long();
        // lowering order: f = x_{-2delta}, y = x_{-delta}
        return build_highest_weight(g, lambda, {nn, 1}, {1, nn});
    }
    if (g->name == "sl21") {
        Cyclotomic hv = lambda.coords[0] - lambda.coords[1];
        Rational n = integral_value(hv, "lambda(h1)");
        if (n < Rational(0)) raise("NotDominantIntegral", "lambda(h1) negative");
        long nn = n.to_long();
        // lowering order: f, y1, y2; the box needs an even-string margin of 2
        // and the raising words one more step to cut the deepest weights
        return build_highest_weight(g, lambda, {nn + 2, 1, 1}, {nn + 3, 1, 1});
    }
    raise("BadParameter", "finite_simple_module supports sl2, osp12, sl21");
    return {};
}

ModuleWindow even_part_simple(const AlgebraPtr& sl21, const Weight& lambda) {
    if (sl21->name != "sl21") raise("BadParameter", "even_part_simple expects sl21");
    Cyclotomic hv = lambda.coords[0] - lambda.coords[1];
    Rational n = integral_value(hv, "lambda(h1)");
    if (n < Rational(0)) raise("NotDominantIntegral", "lambda(h1) negative");
    long nn = n.to_long();

    ModuleWindow m;
    m.algebra = sl21;
    m.completeness = ModuleWindow::Completeness::total;
    RootVector alpha = {1, -1, 0};
    std::vector<Weight> wts;
    for (long k = 0; k <= nn; ++k) {
        Weight w = lambda.shifted(alpha, -k);
        wts.push_back(w);
        m.spaces[w] = {Parity::even};
    }
    GenKey e = GenKey::of_root({1, -1, 0});
    GenKey f = GenKey::of_root({-1, 1, 0});
    for (long k = 0; k <= nn; ++k) {
        if (k + 1 <= nn) {
            Matrix blk(1, 1);
            blk.at(0, 0) = Cyclotomic(1);
            m.actions[f][wts[k]] = blk; // f u_k = u_{k+1}
        }
        if (k >= 1) {
            Matrix blk(1, 1);
            blk.at(0, 0) = Cyclotomic(Rational(k) * (Rational(nn) - Rational(k - 1)));
            m.actions[e][wts[k]] = blk; // e u_k = k(n-k+1) u_{k-1}
        }
    }
    SupportSet supp;
    supp.kind = SupportSet::Kind::finite;
    supp.base = wts;
    m.support = supp;
    m.acting = std::vector<GenKey>{e, f};
    return m;
}

ModuleWindow kac_module_typeI(const AlgebraPtr& g, const ModuleWindow& S) {
    if (g->name == "osp12" || g->name == "qwit")
        raise("NotTypeI", g->name + " is not of type I");
    if (g->name != "sl21")
        raise("BadParameter", "kac_module_typeI is implemented for sl(2|1)");
    if (!S.total()) raise("BadParameter", "inducing module must be total");
    for (const auto& gen : g->gens) {
        if (gen.key.kind != GenKind::root || gen.parity != Parity::odd) continue;
        if (S.gen_acts(gen.key) && S.actions.count(gen.key))
            raise("BadParameter", "inducing module must live over the even part");
    }

    AlgebraPtr kac = make_sl21("kac");
    UEA uea(kac);
    // basis: (subset of {y1,y2}, S basis entry)
    struct KBasis {
        Word lam;        // strictly increasing subset of {0,1}
        Weight s_weight;
        long s_index;
    };
    std::vector<Word> subsets = {{}, {0}, {1}, {0, 1}};

    std::vector<KBasis> basis;
    std::map<Weight, std::vector<size_t>> by_weight;
    auto weight_of = [&](const KBasis& kb) {
        Weight w = kb.s_weight;
        for (int idx : kb.lam) w = w.shifted(kac->gens[idx].weight);
        return w;
    };
    for (const auto& sub : subsets)
        for (const auto& [sw, ps] : S.spaces)
            for (size_t i = 0; i < ps.size(); ++i) basis.push_back({sub, sw, static_cast<long>(i)});
    std::sort(basis.begin(), basis.end(), [&](const KBasis& a, const KBasis& bm) {
        Weight wa = weight_of(a), wb = weight_of(bm);
        if (!(wa == wb)) return wa < wb;
        if (a.lam != bm.lam) return a.lam < bm.lam;
        if (!(a.s_weight == bm.s_weight)) return a.s_weight < bm.s_weight;
        return a.s_index < bm.s_index;
    });
    for (size_t i = 0; i < basis.size(); ++i) by_weight[weight_of(basis[i])].push_back(i);

    ModuleWindow m;
    m.algebra = g;
    m.completeness = ModuleWindow::Completeness::total;
    std::map<Weight, std::map<std::tuple<Word, Weight, long>, long>> index;
    for (const auto& [w, ids] : by_weight) {
        std::vector<Parity> ps;
        long pos = 0;
        for (size_t id : ids) {
            const auto& kb = basis[id];
            Parity sp = S.spaces.at(kb.s_weight)[kb.s_index];
            Parity lp = kb.lam.size() % 2 ? Parity::odd : Parity::even;
            ps.push_back(parity_sum(sp, lp));
            index[w][{kb.lam, kb.s_weight, kb.s_index}] = pos++;
        }
        m.spaces[w] = ps;
    }

    // apply a middle (g_0) word to an S basis vector; letters act right to left
    auto apply_mid = [&](const Word& mid, const Weight& sw, long sidx)
        -> std::pair<Weight, std::vector<Cyclotomic>> {
        Weight cur = sw;
        std::vector<Cyclotomic> vec(S.spaces.at(sw).size(), Cyclotomic());
        vec[sidx] = Cyclotomic(1);
        for (auto it = mid.rbegin(); it != mid.rend(); ++it) {
            const auto& gen = kac->gens[*it];
            if (gen.key.kind == GenKind::cartan) {
                Cyclotomic v = cur.eval(gen.cartan_coords);
                for (auto& x : vec) x *= v;
            } else {
                Matrix blk = S.action_block(gen.key, cur);
                vec = blk.apply(vec);
                cur = cur.shifted(gen.weight);
                if (vec.empty()) break;
            }
        }
        return {cur, vec};
    };

    for (const auto& gen : kac->gens) {
        if (gen.key.kind == GenKind::cartan) continue;
        int gi = kac->index_of(gen.key);
        std::map<Weight, Matrix> blocks;
        for (const auto& [w, ids] : by_weight) {
            Weight tw = w.shifted(gen.weight);
            if (!m.spaces.count(tw)) continue;
            Matrix blk(m.spaces.at(tw).size(), ids.size());
            bool nonzero = false;
            for (size_t c = 0; c < ids.size(); ++c) {
                const auto& kb = basis[ids[c]];
                Word prod{gi};
                prod.insert(prod.end(), kb.lam.begin(), kb.lam.end());
                for (const auto& [word, coef] : uea.normal_form(prod)) {
                    // split: Lambda letters < 2 <= mid < 6 <= raising
                    size_t lam_end = 0;
                    while (lam_end < word.size() && word[lam_end] < kac->lowering_end) ++lam_end;
                    size_t mid_end = lam_end;
                    while (mid_end < word.size() && word[mid_end] < kac->raising_begin) ++mid_end;
                    if (mid_end < word.size()) continue; // g_1 annihilates S
                    Word lam(word.begin(), word.begin() + lam_end);
                    Word mid(word.begin() + lam_end, word.end());
                    auto [sw2, vec] = apply_mid(mid, kb.s_weight, kb.s_index);
                    for (size_t si = 0; si < vec.size(); ++si) {
                        if (vec[si].is_zero()) continue;
                        auto key = std::make_tuple(lam, sw2, static_cast<long>(si));
                        auto wit = index.find(tw);
                        if (wit == index.end()) continue;
                        auto pit = wit->second.find(key);
                        if (pit == wit->second.end())
                            raise("BadParameter", "internal: Kac basis bookkeeping");
                        blk.at(pit->second, c) += coef * vec[si];
                        nonzero = true;
                    }
                }
            }
            if (nonzero) blocks[w] = std::move(blk);
        }
        if (!blocks.empty()) m.actions[gen.key] = std::move(blocks);
    }

    SupportSet supp;
    supp.kind = SupportSet::Kind::finite;
    for (const auto& [w, ps] : m.spaces) supp.base.push_back(w);
    m.support = supp;
    return m;
}

namespace {

// a windowed weight is a frontier weight when some generator image leaves
// the box (the dense actions are nonzero in every direction)
void mark_dense_frontier(ModuleWindow& m) {
    for (const auto& [w, ps] : m.spaces)
        for (const auto& gen : m.algebra->gens) {
            if (gen.key.kind == GenKind::cartan || rv_is_zero(gen.weight)) continue;
            if (!m.has_weight(w.shifted(gen.weight))) {
                m.frontier.insert(w);
                break;
            }
        }
}

} // namespace

ModuleWindow rank1_cuspidal(const AlgebraPtr& g, const DenseParams& params) {
    long W = params.window;
    if (W < 1) raise("BadParameter", "window must be positive");
    ModuleWindow m;
    m.algebra = g;
    m.completeness = ModuleWindow::Completeness::windowed;

    if (g->name == "sl2") {
        RootVector alpha = {1, -1};
        Weight base(std::vector<Cyclotomic>{params.mu, Cyclotomic()});
        std::vector<Weight> wts;
        for (long k = -W; k <= W; ++k) wts.push_back(base.shifted(alpha, k));
        for (const auto& w : wts) m.spaces[w] = {Parity::even};
        // q_k = q0 - k*mu - k(k+1); forced by [e,f] = h
        auto q = [&](long k) {
            return params.q0 - Cyclotomic(Rational(k)) * params.mu -
                   Cyclotomic(Rational(k) * Rational(k + 1));
        };
        for (long k = -W; k < W; ++k) {
            Cyclotomic qk = q(k);
            if (qk.is_zero())
                raise("DegenerateParameters",
                      "raising coefficient vanishes at k=" + std::to_string(k));
        }
        GenKey e = GenKey::of_root({1, -1}), f = GenKey::of_root({-1, 1});
        for (long k = -W; k <= W; ++k) {
            size_t i = static_cast<size_t>(k + W);
            if (k < W) {
                Matrix blk(1, 1);
                blk.at(0, 0) = q(k);
                m.actions[e][wts[i]] = blk;
            }
            if (k > -W) {
                Matrix blk(1, 1);
                blk.at(0, 0) = Cyclotomic(1);
                m.actions[f][wts[i]] = blk;
            }
        }
        SupportSet supp;
        supp.kind = SupportSet::Kind::coset;
        supp.base = {base};
        supp.directions = {alpha, rv_neg(alpha)};
        m.support = supp;
        mark_dense_frontier(m);
        return m;
    }

    if (g->name == "osp12") {
        RootVector delta = {1};
        Weight base(std::vector<Cyclotomic>{params.mu});
        std::vector<Weight> wts;
        for (long k = -W; k <= W; ++k) wts.push_back(base.shifted(delta, k));
        for (long k = -W; k <= W; ++k)
            m.spaces[wts[k + W]] = {(k % 2 + 2) % 2 ? Parity::odd : Parity::even};
        // p_{k-1} + p_k = mu + k, p_0 = q0  (forced by [x_d, x_{-d}] = 2h
        // with x_{-d} acting by the constant 2)
        std::map<long, Cyclotomic> p;
        p[0] = params.q0;
        for (long k = 1; k <= W + 1; ++k)
            p[k] = params.mu + Cyclotomic(Rational(k)) - p[k - 1];
        for (long k = 0; k >= -W - 1; --k)
            p[k - 1] = params.mu + Cyclotomic(Rational(k)) - p[k];
        for (long k = -W; k < W; ++k)
            if (p[k].is_zero())
                raise("DegenerateParameters",
                      "odd raising coefficient vanishes at k=" + std::to_string(k));
        GenKey x = GenKey::of_root({1}), y = GenKey::of_root({-1});
        GenKey e = GenKey::of_root({2}), f = GenKey::of_root({-2});
        for (long k = -W; k <= W; ++k) {
            size_t i = static_cast<size_t>(k + W);
            Matrix one(1, 1);
            if (k < W) {
                one.at(0, 0) = p[k];
                m.actions[x][wts[i]] = one;
            }
            if (k > -W) {
                Matrix blk(1, 1);
                blk.at(0, 0) = Cyclotomic(2);
                m.actions[y][wts[i]] = blk;
            }
            if (k + 2 <= W) {
                Matrix blk(1, 1);
                blk.at(0, 0) = p[k] * p[k + 1];
                m.actions[e][wts[i]] = blk;
            }
            if (k - 2 >= -W) {
                Matrix blk(1, 1);
                blk.at(0, 0) = Cyclotomic(-1);
                m.actions[f][wts[i]] = blk;
            }
        }
        SupportSet supp;
        supp.kind = SupportSet::Kind::coset;
        supp.base = {base};
        supp.directions = {delta, rv_neg(delta)};
        m.support = supp;
        mark_dense_frontier(m);
        return m;
    }

    raise("BadParameter", "rank1_cuspidal supports sl2 and osp12");
    return {};
}

ModuleWindow qwit_module(const AlgebraPtr& qwit, const Cyclotomic& h_value) {
    if (qwit->name != "qwit") raise("BadParameter", "qwit_module expects the witness algebra");
    ModuleWindow m;
    m.algebra = qwit;
    m.completeness = ModuleWindow::Completeness::total;
    Weight w(std::vector<Cyclotomic>{h_value});
    m.spaces[w] = {Parity::even, Parity::odd};
    Matrix s(2, 2);
    s.at(1, 0) = Cyclotomic(1); // s v = w
    s.at(0, 1) = h_value;       // s w = lambda(h) v, so [s,s] = 2h holds
    m.actions[GenKey::of_aux(0)][w] = s;
    SupportSet supp;
    supp.kind = SupportSet::Kind::finite;
    supp.base = {w};
    m.support = supp;
    return m;
}

std::string check_bracket_fidelity(const ModuleWindow& m) {
    const auto& alg = *m.algebra;
    for (size_t i = 0; i < alg.size(); ++i) {
        for (size_t j = 0; j < alg.size(); ++j) {
            const auto& gi = alg.gens[i];
            const auto& gj = alg.gens[j];
            if (!m.gen_acts(gi.key) || !m.gen_acts(gj.key)) continue;
            for (const auto& [w, ps] : m.spaces) {
                Weight wj = w.shifted(gj.weight);
                Weight wi = w.shifted(gi.weight);
                Weight wij = wj.shifted(gi.weight);
                if (!m.total()) {
                    // only judge where the box permits both routes with
                    // untruncated blocks
                    if (!m.has_weight(wij)) continue;
                    if (!m.has_weight(wj) || !m.has_weight(wi)) continue;
                    if (!m.complete_at(w) || !m.complete_at(wi) || !m.complete_at(wj)) continue;
                }
                long tdim = m.dim_at(wij);
                long sdim = m.dim_at(w);
                Matrix lhs(tdim, sdim);
                for (auto [k, c] : alg.bracket[i][j]) {
                    const auto& gk = alg.gens[k];
                    if (!(w.shifted(gk.weight) == wij))
                        return "bracket term with non-additive weight at [" + gi.key.str() +
                               "," + gj.key.str() + "]";
                    lhs = lhs + m.action_block(gk.key, w).scaled(c);
                }
                int sign = (gi.parity == Parity::odd && gj.parity == Parity::odd) ? 1 : -1;
                Matrix rhs = m.action_block(gi.key, wj) * m.action_block(gj.key, w) +
                             (m.action_block(gj.key, wi) * m.action_block(gi.key, w))
                                 .scaled(Cyclotomic(sign));
                if (!(lhs == rhs))
                    return "bracket mismatch [" + gi.key.str() + "," + gj.key.str() +
                           "] at weight " + w.str();
            }
        }
    }
    return "";
}

} // namespace sw
