#include "csf/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace csf {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("partition parts must be >= 1");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    long long w = std::accumulate(parts_.begin(), parts_.end(), 0LL);
    if (w > 64) throw std::invalid_argument("partitions of weight > 64 are unsupported");
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int k) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

int Partition::even_part_count() const {
    return static_cast<int>(
        std::count_if(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; }));
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (!parts_.empty()) {
        conj.resize(static_cast<size_t>(parts_.front()), 0);
        for (int p : parts_) {
            for (int i = 0; i < p; ++i) conj[static_cast<size_t>(i)]++;
        }
    }
    Partition result;
    result.parts_ = std::move(conj);  // already weakly decreasing
    return result;
}

Partition Partition::merged_with(const Partition& other) const {
    std::vector<int> merged;
    merged.reserve(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
               std::back_inserter(merged), std::greater<int>());
    Partition result;
    result.parts_ = std::move(merged);
    return result;
}

bool Partition::remove_one(int value) {
    auto it = std::find(parts_.begin(), parts_.end(), value);
    if (it == parts_.end()) return false;
    parts_.erase(it);
    return true;
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ']';
    return out;
}

Partition Partition::parse(const std::string& text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("partition must look like [3,1,1]: " + text);
    std::vector<int> parts;
    std::string body = text.substr(1, text.size() - 2);
    size_t pos = 0;
    while (pos < body.size()) {
        size_t comma = body.find(',', pos);
        std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad partition part: " + tok);
        parts.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    // lexicographically descending on parts
    return a.parts() > b.parts();
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& current,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(current));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        emit_partitions(remaining - p, p, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> current;
    emit_partitions(n, n == 0 ? 1 : n, current, out);
    std::sort(out.begin(), out.end(), PartitionOrder{});
    return out;
}

}  // namespace csf
