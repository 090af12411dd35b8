#pragma once

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "qtoric/errors.hpp"

namespace qtoric {

// An integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw ParseError("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw ParseError("partition parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    std::size_t size() const { return parts_.size(); }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    // Canonical table order: reverse-lexicographic, largest-first parts.
    friend bool operator<(const Partition& a, const Partition& b) { return b.parts_ < a.parts_; }

    std::string str() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        os << ']';
        return os.str();
    }

private:
    std::vector<int> parts_;
};

// All partitions of n in canonical (reverse-lexicographic) order:
// [n], [n-1,1], ..., [1,...,1].
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw ParseError("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// Parses "4,3" into a partition (sorting is not applied; order must be valid).
inline Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw ParseError("empty partition component in '" + s + "'");
        try {
            parts.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ParseError("bad partition component '" + tok + "'");
        }
    }
    if (parts.empty()) throw ParseError("empty partition");
    return Partition(parts);
}

}  // namespace qtoric
