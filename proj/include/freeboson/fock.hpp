#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "freeboson/scalar.hpp"

namespace freeboson {

/// Multiset of positive integers; part j stands for one factor h(-j).
/// Stored sorted in descending order, so equal multisets compare equal.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    [[nodiscard]] int weight() const { return weight_; }
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    [[nodiscard]] int multiplicity(int part) const;

    [[nodiscard]] Partition with_part(int part) const;
    /// Removes one copy of `part`; the part must be present.
    [[nodiscard]] Partition without_part(int part) const;

    /// "[3,1,1]"
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator<(const Partition& a, const Partition& b) {
        if (a.weight_ != b.weight_) {
            return a.weight_ < b.weight_;
        }
        return a.parts_ < b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Finite rational combination of partition monomials, i.e. an element of
/// S = Q[h(-1), h(-2), ...]. Zero coefficients are never stored.
class FockVector {
public:
    using Terms = std::map<Partition, Scalar>;

    FockVector() = default;
    FockVector(const Partition& p, Scalar coeff = Scalar(1));  // NOLINT(google-explicit-constructor)

    static FockVector vacuum() { return FockVector(Partition{}); }

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] Scalar coeff(const Partition& p) const;
    /// Largest weight among stored monomials; 0 for the zero vector.
    [[nodiscard]] int max_weight() const;
    [[nodiscard]] bool is_homogeneous() const;

    void add_term(const Partition& p, const Scalar& c);

    FockVector& operator+=(const FockVector& o);
    FockVector& operator-=(const FockVector& o);
    FockVector& operator*=(const Scalar& c);

    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(const Scalar& c, FockVector v) { return v *= c; }
    friend FockVector operator*(FockVector v, const Scalar& c) { return v *= c; }
    friend FockVector operator-(FockVector v) { return v *= Scalar(-1); }
    friend bool operator==(const FockVector& a, const FockVector& b) { return a.terms_ == b.terms_; }

    /// "0" or e.g. "1/2*[1,1] + -1*[2]"
    [[nodiscard]] std::string str() const;

private:
    Terms terms_;
};

/// Action of the Heisenberg generator h(n) on S: multiplication for n < 0,
/// n d/dh(-n) for n > 0 and zero for n = 0.
FockVector h_apply(int n, const FockVector& v);
FockVector h_apply(int n, const Partition& p);

/// Decomposition into weight-homogeneous pieces, ascending by weight.
std::vector<std::pair<int, FockVector>> weight_components(const FockVector& v);

/// All partitions of n, each sorted descending; order is deterministic.
std::vector<Partition> partitions_of(int n);
/// Basis monomials of every weight 0..max_weight, ascending by weight.
std::vector<Partition> basis_up_to(int max_weight);

/// dim S_n, the number of partitions of n.
std::int64_t graded_dim(int n);

/// Weight shift of the regularised L(0) grading, -1/24.
Scalar character_offset();

/// First max_n+1 coefficients of the integer-power part of the character.
std::vector<std::int64_t> character_coefficients(int max_n);

}  // namespace freeboson
