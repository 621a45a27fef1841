#include "chiy/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace chiy {

void Partition::canonicalize() {
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("Partition: parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) { canonicalize(); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) { canonicalize(); }

Partition Partition::parse(const std::string& key) {
    std::vector<int> parts;
    if (key.empty()) return Partition(parts);
    size_t pos = 0;
    while (pos <= key.size()) {
        size_t comma = key.find(',', pos);
        std::string piece = key.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(piece, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("Partition: malformed key \"" + key + "\"");
        }
        if (used != piece.size() || value < 1)
            throw std::invalid_argument("Partition: malformed key \"" + key + "\"");
        parts.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(parts);
}

Partition Partition::merged(const Partition& other) const {
    std::vector<int> parts = parts_;
    parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(parts));
}

std::string Partition::key() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::string Partition::monomial() const {
    if (parts_.empty()) return "1";
    std::string out;
    // ascending with multiplicities: (3,1,1) -> c1^2*c3
    for (auto it = parts_.rbegin(); it != parts_.rend();) {
        int part = *it;
        int mult = 0;
        while (it != parts_.rend() && *it == part) {
            ++mult;
            ++it;
        }
        if (!out.empty()) out += '*';
        out += "c" + std::to_string(part);
        if (mult > 1) out += "^" + std::to_string(mult);
    }
    return out;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(Partition(current));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace chiy
