// Integer partitions: the index set of Chern monomials c_I.
#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace chiy {

/// Weakly decreasing list of positive parts; the empty partition (weight 0)
/// indexes the constant monomial. Canonical form is enforced on construction.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    /// Parses a comma-joined key such as "3,1"; "" is the empty partition.
    static Partition parse(const std::string& key);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }

    /// Multiset union of parts: the monomial product c_I * c_J.
    Partition merged(const Partition& other) const;

    /// Comma-joined parts in descending order: "3,1".
    std::string key() const;
    /// Monomial rendering with ascending parts: "c1^2*c3"; "1" when empty.
    std::string monomial() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    /// Graded order: lower weight first; within a weight, larger parts first,
    /// so (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1).
    bool operator<(const Partition& o) const {
        if (weight_ != o.weight_) return weight_ < o.weight_;
        return parts_ > o.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;

    void canonicalize();
};

/// All partitions of n in the Partition ordering; {empty} for n = 0.
std::vector<Partition> partitions_of(int n);

}  // namespace chiy
