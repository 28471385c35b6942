#include "csemi/enumerate.hpp"

#include <algorithm>

#include "csemi/errors.hpp"

namespace csemi {

ConePointStream::ConePointStream(ConePtr cone, OrderPtr order)
    : cone_(std::move(cone)), order_(std::move(order)) {
    if (cone_->dim() != order_->dim())
        throw DimensionMismatchError("cone and order dimensions differ");
    basis_ = hilbert_basis(*cone_);
    basis_weight_.reserve(basis_.size());
    for (const LatticePoint& b : basis_) {
        std::int64_t w = order_->weight(b);
        basis_weight_.push_back(w);
    }
    slices_.push_back({LatticePoint::zero(cone_->dim())});
}

void ConePointStream::ensure_weight(std::int64_t d) {
    while (static_cast<std::int64_t>(slices_.size()) <= d) {
        std::int64_t cur = static_cast<std::int64_t>(slices_.size());
        std::vector<LatticePoint> pts;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            std::int64_t prev = cur - basis_weight_[i];
            if (prev < 0) continue;
            for (const LatticePoint& q : slices_[static_cast<std::size_t>(prev)])
                pts.push_back(q.plus(basis_[i]));
        }
        std::sort(pts.begin(), pts.end(), LatticePoint::lex_less);
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        std::sort(pts.begin(), pts.end(), [this](const LatticePoint& a, const LatticePoint& b) {
            return order_->less(a, b);
        });
        slices_.push_back(std::move(pts));
    }
}

LatticePoint ConePointStream::next() {
    while (true) {
        ensure_weight(static_cast<std::int64_t>(cursor_slice_));
        const std::vector<LatticePoint>& s = slices_[cursor_slice_];
        if (cursor_pos_ < s.size()) return s[cursor_pos_++];
        ++cursor_slice_;
        cursor_pos_ = 0;
    }
}

std::uint64_t ConePointStream::count_preceding(const LatticePoint& x) {
    std::int64_t w = order_->weight(x);
    ensure_weight(w);
    std::uint64_t count = 0;
    for (std::int64_t d = 0; d < w; ++d) count += slices_[static_cast<std::size_t>(d)].size();
    const std::vector<LatticePoint>& s = slices_[static_cast<std::size_t>(w)];
    auto it = std::lower_bound(s.begin(), s.end(), x,
                               [this](const LatticePoint& a, const LatticePoint& b) {
                                   return order_->less(a, b);
                               });
    return count + static_cast<std::uint64_t>(it - s.begin());
}

const std::vector<LatticePoint>& ConePointStream::slice(std::int64_t d) {
    ensure_weight(d);
    return slices_[static_cast<std::size_t>(d)];
}

} // namespace csemi
