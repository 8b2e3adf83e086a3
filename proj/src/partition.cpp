#include "symf/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symf {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

long long Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::multiplicity(int v) const {
    int n = 0;
    for (int p : parts_) n += (p == v);
    return n;
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (size_t i = 0; i < mu.parts_.size(); ++i)
        if (mu.parts_[i] > parts_[i]) return false;
    return true;
}

Partition Partition::union_with(const Partition& other) const {
    std::vector<int> merged;
    merged.reserve(parts_.size() + other.parts_.size());
    size_t i = 0, j = 0;
    while (i < parts_.size() || j < other.parts_.size()) {
        if (j == other.parts_.size() || (i < parts_.size() && parts_[i] >= other.parts_[j]))
            merged.push_back(parts_[i++]);
        else
            merged.push_back(other.parts_[j++]);
    }
    return Partition(std::move(merged));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& acc, int max_len,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(acc);
        return;
    }
    if (max_len >= 0 && static_cast<int>(acc.size()) >= max_len) return;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(n - p, p, acc, max_len, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_len, int max_part) {
    std::vector<Partition> out;
    if (n < 0) return out;
    if (max_part < 0) max_part = n;
    std::vector<int> acc;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    gen_partitions(n, max_part, acc, max_len, out);
    return out;
}

}  // namespace symf
