#include "nilalg/report.hpp"

#include <chrono>
#include <functional>

#include <json.hpp>

#include "nilalg/errors.hpp"

namespace nilalg {

bool Report::pass() const {
    for (const auto& it : items)
        if (!it.pass())
            return false;
    return true;
}

std::string Report::status() const { return pass() ? "pass" : "fail"; }

std::string Report::toJson() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["status"] = status();
    j["items"] = nlohmann::ordered_json::array();
    for (const auto& it : items) {
        nlohmann::ordered_json ji;
        ji["subject"] = it.subject;
        ji["check"] = it.check;
        ji["outcome"] = it.outcome;
        ji["details"] = it.details;
        ji["ms"] = it.ms;
        j["items"].push_back(std::move(ji));
    }
    return j.dump(2) + "\n";
}

std::string Report::toText() const {
    std::string out;
    for (const auto& it : items) {
        out += "[" + (it.pass() ? std::string("PASS") : std::string("FAIL")) + "] " + it.subject +
               " " + it.check;
        if (!it.details.empty())
            out += ": " + it.details;
        out += " (" + std::to_string(it.ms) + " ms)\n";
    }
    out += command + ": " + status() + "\n";
    return out;
}

ReportItem timedItem(const std::string& subject, const std::string& check,
                     const std::function<std::pair<bool, std::string>()>& fn) {
    ReportItem item;
    item.subject = subject;
    item.check = check;
    auto start = std::chrono::steady_clock::now();
    try {
        auto [ok, detail] = fn();
        item.outcome = ok ? "pass" : "fail";
        item.details = detail;
    } catch (const Error& e) {
        item.outcome = "fail";
        item.details = e.what();
    }
    auto end = std::chrono::steady_clock::now();
    item.ms = std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    return item;
}

} // namespace nilalg
