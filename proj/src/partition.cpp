#include "qgrass/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace qgrass {

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("strict partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] <= parts_[i + 1])
            throw std::invalid_argument("strict partition parts must strictly decrease");
    }
}

StrictPartition StrictPartition::parse(std::string_view text) {
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
        size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        size_t stop = end;
        while (stop > pos && (text[stop - 1] == ' ' || text[stop - 1] == '\t')) --stop;
        if (stop > pos) {
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + stop, value);
            if (ec != std::errc() || ptr != text.data() + stop)
                throw std::invalid_argument("cannot parse partition entry '" +
                                            std::string(text.substr(pos, stop - pos)) + "'");
            parts.push_back(value);
        } else if (end < text.size()) {
            throw std::invalid_argument("empty partition entry");
        }
        pos = end + 1;
    }
    if (parts.size() == 1 && parts[0] == 0) parts.clear();
    return StrictPartition(std::move(parts));
}

int StrictPartition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string StrictPartition::to_string() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

bool basis_less(const StrictPartition& a, const StrictPartition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a.parts() > b.parts();
}

std::vector<StrictPartition> enumerate_strict(int n) {
    if (n < 1 || n > 24)
        throw std::invalid_argument("rank out of supported range");
    std::vector<StrictPartition> out;
    out.reserve(size_t(1) << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> parts;
        for (int p = n; p >= 1; --p)
            if (mask & (1u << (p - 1))) parts.push_back(p);
        out.emplace_back(std::move(parts));
    }
    std::sort(out.begin(), out.end(), basis_less);
    return out;
}

StrictPartition complement(const StrictPartition& lambda, int n) {
    if (n < 1) throw std::invalid_argument("rank out of supported range");
    if (!lambda.fits(n))
        throw std::invalid_argument("partition does not fit in rank " + std::to_string(n));
    std::vector<bool> used(size_t(n) + 1, false);
    for (int p : lambda.parts()) used[size_t(p)] = true;
    std::vector<int> parts;
    for (int p = n; p >= 1; --p)
        if (!used[size_t(p)]) parts.push_back(p);
    return StrictPartition(std::move(parts));
}

std::vector<int> pad_even(const StrictPartition& lambda) {
    std::vector<int> out = lambda.parts();
    if (out.size() % 2) out.push_back(0);
    return out;
}

}  // namespace qgrass
