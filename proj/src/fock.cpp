#include "freeboson/fock.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace freeboson {

namespace {

int sum_of(const std::vector<int>& parts) { return std::accumulate(parts.begin(), parts.end(), 0); }

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) {
            throw std::invalid_argument("Partition: parts must be positive");
        }
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    weight_ = sum_of(parts_);
}

int Partition::multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Partition Partition::with_part(int part) const {
    Partition out = *this;
    auto pos = std::lower_bound(out.parts_.begin(), out.parts_.end(), part, std::greater<>());
    out.parts_.insert(pos, part);
    out.weight_ += part;
    return out;
}

Partition Partition::without_part(int part) const {
    Partition out = *this;
    auto pos = std::find(out.parts_.begin(), out.parts_.end(), part);
    if (pos == out.parts_.end()) {
        throw std::invalid_argument("Partition: part not present");
    }
    out.parts_.erase(pos);
    out.weight_ -= part;
    return out;
}

std::string Partition::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i != 0) {
            s += ",";
        }
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

FockVector::FockVector(const Partition& p, Scalar coeff) {
    if (!coeff.is_zero()) {
        terms_.emplace(p, std::move(coeff));
    }
}

Scalar FockVector::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Scalar(0) : it->second;
}

int FockVector::max_weight() const {
    int w = 0;
    for (const auto& [p, c] : terms_) {
        w = std::max(w, p.weight());
    }
    return w;
}

bool FockVector::is_homogeneous() const {
    if (terms_.empty()) {
        return true;
    }
    const int w = terms_.begin()->first.weight();
    return std::all_of(terms_.begin(), terms_.end(), [w](const auto& t) { return t.first.weight() == w; });
}

void FockVector::add_term(const Partition& p, const Scalar& c) {
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

FockVector& FockVector::operator+=(const FockVector& o) {
    for (const auto& [p, c] : o.terms_) {
        add_term(p, c);
    }
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
    for (const auto& [p, c] : o.terms_) {
        add_term(p, -c);
    }
    return *this;
}

FockVector& FockVector::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, v] : terms_) {
        v *= c;
    }
    return *this;
}

std::string FockVector::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    for (const auto& [p, c] : terms_) {
        if (!s.empty()) {
            s += " + ";
        }
        s += c.str() + "*" + p.str();
    }
    return s;
}

FockVector h_apply(int n, const Partition& p) {
    if (n == 0) {
        return {};
    }
    if (n < 0) {
        return FockVector(p.with_part(-n));
    }
    const int k = p.multiplicity(n);
    if (k == 0) {
        return {};
    }
    return FockVector(p.without_part(n), Scalar(static_cast<long>(n) * k));
}

FockVector h_apply(int n, const FockVector& v) {
    FockVector out;
    for (const auto& [p, c] : v.terms()) {
        FockVector img = h_apply(n, p);
        for (const auto& [q, d] : img.terms()) {
            out.add_term(q, c * d);
        }
    }
    return out;
}

std::vector<std::pair<int, FockVector>> weight_components(const FockVector& v) {
    std::map<int, FockVector> by_weight;
    for (const auto& [p, c] : v.terms()) {
        by_weight[p.weight()].add_term(p, c);
    }
    return {by_weight.begin(), by_weight.end()};
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) {
        return out;
    }
    std::vector<int> current;
    // parts generated in non-increasing order
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> basis_up_to(int max_weight) {
    std::vector<Partition> out;
    for (int w = 0; w <= max_weight; ++w) {
        auto ps = partitions_of(w);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

std::int64_t graded_dim(int n) {
    if (n < 0) {
        throw std::invalid_argument("graded_dim: n must be nonnegative");
    }
    return static_cast<std::int64_t>(partitions_of(n).size());
}

Scalar character_offset() { return Scalar(-1, 24); }

std::vector<std::int64_t> character_coefficients(int max_n) {
    std::vector<std::int64_t> out;
    for (int n = 0; n <= max_n; ++n) {
        out.push_back(graded_dim(n));
    }
    return out;
}

}  // namespace freeboson
