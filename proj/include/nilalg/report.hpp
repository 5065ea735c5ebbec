#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace nilalg {

struct ReportItem {
    std::string subject;
    std::string check;
    std::string outcome; // "pass" | "fail"
    std::string details;
    long ms = 0;

    bool pass() const { return outcome == "pass"; }
};

/// Deterministic verification report: items in catalog order, status pass
/// iff every item passes.
struct Report {
    std::string command;
    std::vector<ReportItem> items;

    void add(ReportItem item) { items.push_back(std::move(item)); }
    void merge(const Report& other) {
        items.insert(items.end(), other.items.begin(), other.items.end());
    }

    bool pass() const;
    std::string status() const; // "pass" | "fail"
    std::string toJson() const; // stable field names, insertion-ordered
    std::string toText() const;
};

/// Runs fn and records outcome/detail plus wall time.
ReportItem timedItem(const std::string& subject, const std::string& check,
                     const std::function<std::pair<bool, std::string>()>& fn);

} // namespace nilalg
