#pragma once

#include "ovc/rational.hpp"

#include <iosfwd>
#include <vector>

namespace ovc {

/// Nonzero vector with exact rational coordinates.
struct RationalVector {
    std::vector<Rat> coords;

    int dim() const { return static_cast<int>(coords.size()); }
    bool is_zero() const;
    friend bool operator==(const RationalVector& a, const RationalVector& b);
};

Rat dot(const RationalVector& a, const RationalVector& b);

/// Primitive integer representative with positive first nonzero coordinate.
/// Two vectors are scalar multiples of one another iff their canonical
/// forms coincide.
RationalVector canonical_form(const RationalVector& v);

/// Ordered set of vectors of one dimension, pairwise distinct up to nonzero
/// scaling. The constructor validates and throws std::invalid_argument.
class VectorSet {
public:
    explicit VectorSet(std::vector<RationalVector> vectors);

    int dimension() const { return d_; }
    int size() const { return static_cast<int>(vecs_.size()); }
    const RationalVector& operator[](int i) const { return vecs_[i]; }
    const std::vector<RationalVector>& vectors() const { return vecs_; }
    const std::vector<RationalVector>& canonical_forms() const { return canon_; }

private:
    std::vector<RationalVector> vecs_;
    std::vector<RationalVector> canon_;
    int d_ = 0;
};

/// Text form: one vector per line as comma-separated rationals ("p/q" or
/// integers), '#' comments, then an optional section opened by a line
/// reading "bases" whose lines are whitespace-separated vector indices.
struct VectorSetFile {
    VectorSet vectors;
    std::vector<std::vector<int>> bases;
};

VectorSetFile read_vectorset(std::istream& in);

void write_vectorset(std::ostream& out, const VectorSet& s,
                     const std::vector<std::vector<int>>& bases = {});

}  // namespace ovc
