#ifndef PXP_PARTITIONS_HPP
#define PXP_PARTITIONS_HPP

#include <set>
#include <string>
#include <vector>

#include "pxp/errors.hpp"

namespace pxp {

// Integer partition: non-increasing positive parts.
struct Partition {
    std::vector<int> parts;

    Partition() = default;

    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        if (parts.empty()) throw InvalidInput("empty partition");
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1) throw InvalidInput("partition parts must be positive");
            if (i > 0 && parts[i] > parts[i - 1])
                throw InvalidInput("partition parts must be non-increasing");
        }
    }

    static Partition parse(const std::string& s) {
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t next = s.find(',', pos);
            if (next == std::string::npos) next = s.size();
            std::string tok = s.substr(pos, next - pos);
            try {
                parts.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw InvalidInput("bad partition entry: '" + tok + "'");
            }
            pos = next + 1;
        }
        return Partition(std::move(parts));
    }

    int rows() const { return static_cast<int>(parts.size()); }

    int total() const {
        int n = 0;
        for (int p : parts) n += p;
        return n;
    }

    int distinct_parts() const {
        std::set<int> s(parts.begin(), parts.end());
        return static_cast<int>(s.size());
    }

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts[i]);
        }
        return s;
    }
};

namespace detail {
inline void extend_partition(int remaining, int max_part, std::vector<int>& cur,
                             std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        extend_partition(remaining - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

// Partitions of exactly n, lexicographically descending: (n), (n-1,1), ...
inline std::vector<Partition> partitions_of(int n) {
    if (n < 1) throw InvalidInput("partitions_of requires n >= 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::extend_partition(n, n, cur, out);
    return out;
}

// Partitions of every size 1..n, sizes ascending.
inline std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 1; k <= n; ++k) {
        auto p = partitions_of(k);
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

}  // namespace pxp

#endif
