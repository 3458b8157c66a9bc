#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pieri {

/// One verified clause of a report.
struct Check {
    std::string clause;
    bool ok = false;
    std::string detail;
};

/// Number of code points of a UTF-8 string, for column alignment.
inline std::size_t display_width(const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

/// Ordered list of verified clauses.
class CheckList {
public:
    void add(std::string clause, bool ok, std::string detail = {}) {
        items_.push_back({std::move(clause), ok, std::move(detail)});
    }
    void append(const CheckList& other, const std::string& prefix = {}) {
        for (const auto& c : other.items_) items_.push_back({prefix + c.clause, c.ok, c.detail});
    }
    bool passed() const {
        return std::all_of(items_.begin(), items_.end(), [](const Check& c) { return c.ok; });
    }
    std::optional<Check> first_failure() const {
        for (const auto& c : items_)
            if (!c.ok) return c;
        return std::nullopt;
    }
    const std::vector<Check>& items() const { return items_; }

private:
    std::vector<Check> items_;
};

}  // namespace pieri
