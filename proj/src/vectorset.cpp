#include "ovc/vectorset.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ovc {

bool RationalVector::is_zero() const {
    return std::all_of(coords.begin(), coords.end(),
                       [](const Rat& c) { return c == 0; });
}

bool operator==(const RationalVector& a, const RationalVector& b) {
    if (a.dim() != b.dim()) return false;
    for (int i = 0; i < a.dim(); ++i)
        if (a.coords[i] != b.coords[i]) return false;
    return true;
}

Rat dot(const RationalVector& a, const RationalVector& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("dot product of vectors of different dimension");
    Rat acc = 0;
    for (int i = 0; i < a.dim(); ++i) acc += a.coords[i] * b.coords[i];
    return acc;
}

RationalVector canonical_form(const RationalVector& v) {
    if (v.is_zero())
        throw std::invalid_argument("zero vector has no canonical form");
    // Clear denominators, divide by the gcd, make the first nonzero
    // coordinate positive.
    mpz_class denom_lcm = 1;
    for (const Rat& c : v.coords)
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
                c.get_den().get_mpz_t());
    std::vector<mpz_class> ints;
    ints.reserve(v.coords.size());
    mpz_class g = 0;
    for (const Rat& c : v.coords) {
        mpz_class w = c.get_num() * (denom_lcm / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w.get_mpz_t());
        ints.push_back(std::move(w));
    }
    int sign = 0;
    for (const auto& w : ints)
        if (w != 0) {
            sign = mpz_sgn(w.get_mpz_t());
            break;
        }
    RationalVector out;
    out.coords.reserve(ints.size());
    for (auto& w : ints) {
        mpz_class q = w / g;
        if (sign < 0) q = -q;
        out.coords.emplace_back(q);
    }
    return out;
}

VectorSet::VectorSet(std::vector<RationalVector> vectors)
    : vecs_(std::move(vectors)) {
    if (vecs_.empty()) throw std::invalid_argument("vector set is empty");
    d_ = vecs_.front().dim();
    if (d_ < 1) throw std::invalid_argument("vectors must have dimension >= 1");
    canon_.reserve(vecs_.size());
    for (std::size_t i = 0; i < vecs_.size(); ++i) {
        if (vecs_[i].dim() != d_)
            throw std::invalid_argument("vector " + std::to_string(i) +
                                        " has dimension " +
                                        std::to_string(vecs_[i].dim()) +
                                        ", expected " + std::to_string(d_));
        if (vecs_[i].is_zero())
            throw std::invalid_argument("vector " + std::to_string(i) + " is zero");
        canon_.push_back(canonical_form(vecs_[i]));
    }
    for (std::size_t i = 0; i < canon_.size(); ++i)
        for (std::size_t j = i + 1; j < canon_.size(); ++j)
            if (canon_[i] == canon_[j])
                throw std::invalid_argument(
                    "vectors " + std::to_string(i) + " and " + std::to_string(j) +
                    " are scalar multiples of one another");
}

VectorSetFile read_vectorset(std::istream& in) {
    std::vector<RationalVector> vectors;
    std::vector<std::vector<int>> bases;
    bool in_bases = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
            line.pop_back();
        std::size_t start = 0;
        while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start])))
            ++start;
        line.erase(0, start);
        if (line.empty()) continue;
        if (line == "bases") {
            in_bases = true;
            continue;
        }
        if (!in_bases) {
            RationalVector v;
            std::stringstream ss(line);
            std::string field;
            while (std::getline(ss, field, ','))
                v.coords.push_back(parse_rational(field));
            vectors.push_back(std::move(v));
        } else {
            std::vector<int> tuple;
            std::stringstream ss(line);
            int idx;
            while (ss >> idx) tuple.push_back(idx);
            if (!ss.eof())
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": bases entries must be integers");
            for (int t : tuple)
                if (t < 0 || t >= static_cast<int>(vectors.size()))
                    throw std::invalid_argument("line " + std::to_string(lineno) +
                                                ": basis index " + std::to_string(t) +
                                                " out of range");
            bases.push_back(std::move(tuple));
        }
    }
    return VectorSetFile{VectorSet(std::move(vectors)), std::move(bases)};
}

void write_vectorset(std::ostream& out, const VectorSet& s,
                     const std::vector<std::vector<int>>& bases) {
    for (const auto& v : s.vectors()) {
        for (int i = 0; i < v.dim(); ++i) {
            if (i) out << ',';
            out << format_rational(v.coords[i]);
        }
        out << '\n';
    }
    if (!bases.empty()) {
        out << "bases\n";
        for (const auto& b : bases) {
            for (std::size_t i = 0; i < b.size(); ++i) {
                if (i) out << ' ';
                out << b[i];
            }
            out << '\n';
        }
    }
}

}  // namespace ovc
