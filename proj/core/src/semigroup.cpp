#include "csemi/semigroup.hpp"

#include <algorithm>

#include "csemi/errors.hpp"
#include "csemi/hilbert.hpp"

namespace csemi {

CSemigroup CSemigroup::root(ConePtr cone, OrderPtr order) {
    if (cone->dim() != order->dim())
        throw DimensionMismatchError("cone and order dimensions differ");
    CSemigroup s(std::move(cone), std::move(order));
    s.gens_ = hilbert_basis(s.cone());
    std::sort(s.gens_.begin(), s.gens_.end(),
              [&s](const LatticePoint& a, const LatticePoint& b) { return s.order().less(a, b); });
    s.first_eligible_ = 0; // sentinel Frobenius precedes everything
    return s;
}

CSemigroup CSemigroup::from_gaps(ConePtr cone, OrderPtr order, std::vector<LatticePoint> gaps) {
    CSemigroup s = root(cone, order);
    std::sort(gaps.begin(), gaps.end(),
              [&s](const LatticePoint& a, const LatticePoint& b) { return s.order().less(a, b); });
    gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
    for (const LatticePoint& h : gaps) {
        if (!s.cone().contains(h) || h.is_zero())
            throw NotClosedError("gap " + h.to_string() + " is not a nonzero point of the cone");
        // h must be the next removable generator; otherwise the complement of
        // the gap set is not closed under addition.
        const std::vector<LatticePoint>& g = s.gens_;
        auto it = std::find(g.begin() + s.first_eligible_, g.end(), h);
        if (it == g.end())
            throw NotClosedError("gap set does not describe a semigroup: " + h.to_string() +
                                 " is not a minimal generator of the previous level");
        s = s.effective_son(static_cast<int>(it - g.begin()) - s.first_eligible_);
    }
    return s;
}

CSemigroup CSemigroup::from_parts(ConePtr cone, OrderPtr order, std::vector<LatticePoint> gaps,
                                  std::vector<LatticePoint> gens) {
    CSemigroup s(std::move(cone), std::move(order));
    auto lt = [&s](const LatticePoint& a, const LatticePoint& b) { return s.order().less(a, b); };
    std::sort(gaps.begin(), gaps.end(), lt);
    std::sort(gens.begin(), gens.end(), lt);
    s.gaps_ = std::move(gaps);
    s.gens_ = std::move(gens);
    s.recompute_first_eligible();
    return s;
}

bool CSemigroup::is_gap(const LatticePoint& x) const {
    return std::binary_search(gaps_.begin(), gaps_.end(), x,
                              [this](const LatticePoint& a, const LatticePoint& b) {
                                  return order_->less(a, b);
                              });
}

bool CSemigroup::is_minimal_generator(const LatticePoint& x) const {
    if (x.is_zero() || !member(x))
        throw BadParamsError("is_minimal_generator requires a nonzero member");
    for (const LatticePoint& g : gens_) {
        if (g == x) continue;
        LatticePoint rest = x.minus(g);
        if (!rest.is_zero() && member(rest)) return false;
    }
    // x has no split through a minimal generator, hence no split at all.
    return true;
}

void CSemigroup::recompute_first_eligible() {
    if (gaps_.empty()) {
        first_eligible_ = 0;
        return;
    }
    const LatticePoint& fb = gaps_.back();
    auto it = std::upper_bound(gens_.begin(), gens_.end(), fb,
                               [this](const LatticePoint& a, const LatticePoint& b) {
                                   return order_->less(a, b);
                               });
    first_eligible_ = static_cast<int>(it - gens_.begin());
}

CSemigroup CSemigroup::effective_son(int k) const {
    const std::size_t removed_idx = static_cast<std::size_t>(first_eligible_ + k);
    const LatticePoint s = gens_[removed_idx];

    CSemigroup child(cone_, order_);
    child.gaps_.reserve(gaps_.size() + 1);
    child.gaps_ = gaps_;
    child.gaps_.push_back(s); // s succeeds every old gap, so order is kept

    // The only possible new minimal generators: the removed generator can
    // reenter a sum only as 2s, 3s or s + (old generator).
    std::vector<LatticePoint> candidates;
    candidates.reserve(gens_.size() + 1);
    candidates.push_back(s.scaled(2));
    candidates.push_back(s.scaled(3));
    for (std::size_t j = 0; j < gens_.size(); ++j)
        if (j != removed_idx) candidates.push_back(s.plus(gens_[j]));
    std::sort(candidates.begin(), candidates.end(), LatticePoint::lex_less);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // Membership in the child: in the cone, not an old gap, not s itself.
    auto child_member = [&](const LatticePoint& y) {
        return cone_->contains(y) && y != s && !is_gap(y);
    };
    // c splits as a + b with nonzero child members iff it splits with a taken
    // from the retained generators or the candidate set (every minimal
    // generator of the child lies in their union).
    auto reducible = [&](const LatticePoint& c) {
        for (std::size_t j = 0; j < gens_.size(); ++j) {
            if (j == removed_idx) continue;
            LatticePoint rest = c.minus(gens_[j]);
            if (!rest.is_zero() && child_member(rest)) return true;
        }
        for (const LatticePoint& a : candidates) {
            if (a == c) continue;
            LatticePoint rest = c.minus(a);
            if (!rest.is_zero() && child_member(rest)) return true;
        }
        return false;
    };

    child.gens_.reserve(gens_.size() + 2);
    for (std::size_t j = 0; j < gens_.size(); ++j)
        if (j != removed_idx) child.gens_.push_back(gens_[j]);
    for (const LatticePoint& c : candidates) {
        if (reducible(c)) continue;
        auto pos = std::lower_bound(child.gens_.begin(), child.gens_.end(), c,
                                    [this](const LatticePoint& a, const LatticePoint& b) {
                                        return order_->less(a, b);
                                    });
        child.gens_.insert(pos, c);
    }
    child.recompute_first_eligible();
    return child;
}

std::vector<CSemigroup> CSemigroup::effective_sons() const {
    std::vector<CSemigroup> sons;
    sons.reserve(static_cast<std::size_t>(eligible_count()));
    for (int k = 0; k < eligible_count(); ++k) sons.push_back(effective_son(k));
    return sons;
}

std::uint64_t CSemigroup::sporadic_count(PrecedingCounter* cache) const {
    if (gaps_.empty())
        throw RootHasNoFrobeniusError("the root semigroup has no Frobenius element");
    const LatticePoint& fb = gaps_.back();
    std::uint64_t below;
    if (cache) {
        below = cache->count_preceding(fb);
    } else {
        PrecedingCounter counter(cone_, order_);
        below = counter.count_preceding(fb);
    }
    return below - (gaps_.size() - 1);
}

WilfRecord CSemigroup::wilf_check(PrecedingCounter* cache) const {
    WilfRecord r{};
    r.sporadic = sporadic_count(cache);
    r.edim = gens_.size();
    r.genus = gaps_.size();
    r.frobenius_number = r.sporadic + r.genus;
    // n*e >= n+g, i.e. the classical right-hand side F+1 on numerical
    // semigroups; products stay exact in 128 bits.
    __int128 lhs = static_cast<__int128>(r.sporadic) * static_cast<__int128>(r.edim);
    r.holds = lhs >= static_cast<__int128>(r.frobenius_number);
    return r;
}

} // namespace csemi
