#pragma once

#include <string>
#include <vector>

#include "symf/tpoly.hpp"

namespace symf {

// Integer partition in canonical form: weakly decreasing positive parts,
// trailing zeros stripped. The empty partition is the default value.
class Partition {
  public:
    Partition() = default;
    // Accepts weakly decreasing entries with trailing (or interior-final)
    // zeros; throws std::invalid_argument otherwise.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    long long weight() const;
    // part(i) is 1-based and 0 beyond the last part
    int part(size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
    // multiplicity of value v among the parts
    int multiplicity(int v) const;
    bool contains(const Partition& mu) const;

    // parts of both, merged in descending order
    Partition union_with(const Partition& other) const;

    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    // ascending lexicographic; handy for cache keys (canonical output order
    // uses PartitionLexGreater instead)
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

  private:
    std::vector<int> parts_;
};

// Orders partitions descending-lexicographically; used as the map comparator
// so serialized sums list largest keys first.
struct PartitionLexGreater {
    bool operator()(const Partition& a, const Partition& b) const {
        return b.parts() < a.parts();
    }
};

// All partitions of n (optionally bounded length / largest part), listed in
// descending lexicographic order.
std::vector<Partition> partitions_of(int n, int max_len = -1, int max_part = -1);

}  // namespace symf
