#pragma once

#include "json.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace bgd {

/// One verdict per displayed axiom.  Check identifiers are stable strings
/// ("alg.assoc", "bgd.delta_multiplicative", ...) so scripts can pin
/// expected failures; `detail` carries the witness (offending basis indices
/// or a counterexample description), empty on pass.
struct CheckItem {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string subject;
    std::vector<CheckItem> items;

    explicit Report(std::string subj = "") : subject(std::move(subj)) {}

    void add(const std::string& id, bool pass, const std::string& detail = "") {
        items.push_back({id, pass, pass ? "" : detail});
    }

    void merge(const Report& sub, const std::string& prefix) {
        for (const auto& it : sub.items)
            items.push_back({prefix + it.id, it.pass, it.detail});
    }

    bool ok() const {
        return std::all_of(items.begin(), items.end(),
                           [](const CheckItem& c) { return c.pass; });
    }

    const CheckItem* find(const std::string& id) const {
        for (const auto& it : items)
            if (it.id == id)
                return &it;
        return nullptr;
    }

    /// Items sorted by identifier; serialization is canonical.
    nlohmann::json to_json() const {
        auto sorted = items;
        std::stable_sort(sorted.begin(), sorted.end(),
                         [](const CheckItem& a, const CheckItem& b) { return a.id < b.id; });
        nlohmann::json j;
        j["subject"] = subject;
        j["overall"] = ok() ? "pass" : "fail";
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& it : sorted) {
            nlohmann::json e;
            e["id"] = it.id;
            e["verdict"] = it.pass ? "pass" : "fail";
            if (!it.detail.empty())
                e["witness"] = it.detail;
            arr.push_back(e);
        }
        j["checks"] = arr;
        return j;
    }

    /// Human-readable rendering of exactly the JSON content.
    std::string to_text() const {
        auto j = to_json();
        std::string out = "== " + subject + ": " + j["overall"].get<std::string>() + "\n";
        for (const auto& e : j["checks"]) {
            out += "  [" + e["verdict"].get<std::string>() + "] " + e["id"].get<std::string>();
            if (e.contains("witness"))
                out += "  (" + e["witness"].get<std::string>() + ")";
            out += "\n";
        }
        return out;
    }
};

}  // namespace bgd
