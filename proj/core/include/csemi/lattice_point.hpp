#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "csemi/checked.hpp"
#include "csemi/errors.hpp"

namespace csemi {

/// Largest ambient dimension supported by the inline point storage.
inline constexpr int kMaxDim = 8;

/// A small integer vector. Points of a cone or semigroup have all
/// coordinates >= 0; differences computed during decomposition searches may
/// be negative. The vector (-1,...,-1) doubles as the Frobenius sentinel of
/// the root semigroup.
class LatticePoint {
public:
    LatticePoint() : dim_(0) { c_.fill(0); }

    explicit LatticePoint(std::span<const std::int64_t> coords) {
        if (coords.size() < 1 || coords.size() > static_cast<std::size_t>(kMaxDim))
            throw DimensionMismatchError("point dimension must be between 1 and " +
                                         std::to_string(kMaxDim));
        dim_ = static_cast<std::int8_t>(coords.size());
        c_.fill(0);
        for (std::size_t i = 0; i < coords.size(); ++i) c_[i] = coords[i];
    }

    LatticePoint(std::initializer_list<std::int64_t> coords)
        : LatticePoint(std::span<const std::int64_t>(coords.begin(), coords.size())) {}

    static LatticePoint zero(int dim) {
        LatticePoint p;
        p.dim_ = check_dim(dim);
        return p;
    }

    static LatticePoint unit(int dim, int axis) {
        LatticePoint p = zero(dim);
        p.c_[static_cast<std::size_t>(axis)] = 1;
        return p;
    }

    /// The conventional Frobenius element of a root semigroup.
    static LatticePoint sentinel(int dim) {
        LatticePoint p;
        p.dim_ = check_dim(dim);
        for (int i = 0; i < dim; ++i) p.c_[static_cast<std::size_t>(i)] = -1;
        return p;
    }

    int dim() const { return dim_; }

    std::int64_t operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    std::int64_t& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

    bool is_zero() const {
        for (int i = 0; i < dim_; ++i)
            if (c_[static_cast<std::size_t>(i)] != 0) return false;
        return true;
    }

    bool is_sentinel() const {
        if (dim_ == 0) return false;
        for (int i = 0; i < dim_; ++i)
            if (c_[static_cast<std::size_t>(i)] != -1) return false;
        return true;
    }

    bool nonnegative() const {
        for (int i = 0; i < dim_; ++i)
            if (c_[static_cast<std::size_t>(i)] < 0) return false;
        return true;
    }

    LatticePoint plus(const LatticePoint& o) const {
        LatticePoint r = *this;
        for (int i = 0; i < dim_; ++i) r[i] = checked_add(r[i], o[i]);
        return r;
    }

    LatticePoint minus(const LatticePoint& o) const {
        LatticePoint r = *this;
        for (int i = 0; i < dim_; ++i) r[i] = checked_sub(r[i], o[i]);
        return r;
    }

    LatticePoint scaled(std::int64_t k) const {
        LatticePoint r = *this;
        for (int i = 0; i < dim_; ++i) r[i] = checked_mul(r[i], k);
        return r;
    }

    friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
        if (a.dim_ != b.dim_) return false;
        for (int i = 0; i < a.dim_; ++i)
            if (a[i] != b[i]) return false;
        return true;
    }
    friend bool operator!=(const LatticePoint& a, const LatticePoint& b) { return !(a == b); }

    /// Plain coordinatewise lexicographic comparison: a canonical key for
    /// storage and lookups, independent of any monomial order.
    static bool lex_less(const LatticePoint& a, const LatticePoint& b) {
        for (int i = 0; i < a.dim_; ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }

    std::vector<std::int64_t> to_vector() const {
        return std::vector<std::int64_t>(c_.begin(), c_.begin() + dim_);
    }

    std::string to_string() const {
        std::string s = "(";
        for (int i = 0; i < dim_; ++i) {
            if (i) s += ",";
            s += std::to_string(c_[static_cast<std::size_t>(i)]);
        }
        s += ")";
        return s;
    }

private:
    static std::int8_t check_dim(int dim) {
        if (dim < 1 || dim > kMaxDim)
            throw DimensionMismatchError("point dimension must be between 1 and " +
                                         std::to_string(kMaxDim));
        return static_cast<std::int8_t>(dim);
    }

    std::int8_t dim_;
    std::array<std::int64_t, kMaxDim> c_;
};

/// Exact dot product. The 128-bit accumulator holds any sum of kMaxDim
/// products of 64-bit values; the result must fit back into 64 bits.
inline std::int64_t dot(const LatticePoint& a, const LatticePoint& b) {
    __int128 acc = 0;
    for (int i = 0; i < a.dim(); ++i)
        acc += static_cast<__int128>(a[i]) * static_cast<__int128>(b[i]);
    return narrow_i128(acc);
}

struct LatticePointHash {
    std::size_t operator()(const LatticePoint& p) const {
        std::size_t h = static_cast<std::size_t>(p.dim()) * 0x9e3779b97f4a7c15ULL;
        for (int i = 0; i < p.dim(); ++i) {
            h ^= static_cast<std::size_t>(p[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

} // namespace csemi
