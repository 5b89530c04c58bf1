#include "sombor/report.hpp"

#include <cstdio>

namespace sombor {

namespace {

const char* class_name(GraphKind k) { return k == GraphKind::Tree ? "tree" : "unicyclic"; }

}  // namespace

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", x);
    return buf;
}

nlohmann::json to_json(const RadicalSum& s) {
    nlohmann::json out = nlohmann::json::array();
    for (auto [r, m] : s.pairs()) out.push_back({r, m});
    return out;
}

nlohmann::json to_json(const ExtremalRecord& r) {
    nlohmann::json codes = nlohmann::json::array();
    for (const auto& c : r.argmax_codes) codes.push_back(c.to_string());
    return {
        {"n", r.n},
        {"m", r.m},
        {"class", class_name(r.graph_class)},
        {"class_size", r.class_size},
        {"max_value", to_json(r.max_value)},
        {"max_float", r.max_value.value()},
        {"argmax_codes", codes},
        {"argmax_graph6", r.argmax_graph6},
        {"predicted", to_json(r.predicted)},
        {"predicted_float", r.predicted.value()},
        {"predicted_code", r.predicted_code.to_string()},
        {"unique", r.unique()},
        {"verdict", r.pass ? "pass" : "fail"},
    };
}

nlohmann::json to_json(const LemmaReport& r) {
    nlohmann::json cex = nlohmann::json::array();
    for (const auto& c : r.counterexamples) cex.push_back({{"graph6", c.graph6}, {"detail", c.detail}});
    return {
        {"lemma", r.lemma},
        {"instances", r.instances},
        {"counterexamples", cex},
        {"verdict", r.pass() ? "pass" : "fail"},
    };
}

void VerificationReport::add(const TheoremReport& t) {
    records.insert(records.end(), t.records.begin(), t.records.end());
    totals.insert(totals.end(), t.totals.begin(), t.totals.end());
}

bool VerificationReport::pass() const {
    for (const auto& r : records)
        if (!r.pass) return false;
    for (const auto& l : lemmas)
        if (!l.pass()) return false;
    return true;
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& rec : r.records) records.push_back(to_json(rec));
    nlohmann::json totals = nlohmann::json::array();
    for (const auto& t : r.totals)
        totals.push_back({{"n", t.n},
                          {"class", class_name(t.graph_class)},
                          {"enumerated", t.enumerated},
                          {"outside_range", t.outside_range}});
    nlohmann::json lemmas = nlohmann::json::array();
    for (const auto& l : r.lemmas) lemmas.push_back(to_json(l));
    return {{"extremal", records},
            {"class_totals", totals},
            {"lemmas", lemmas},
            {"verdict", r.pass() ? "pass" : "fail"}};
}

std::string extremal_csv(const std::vector<ExtremalRecord>& records) {
    std::string out = "n,m,class,class_size,max_float,predicted_float,unique,verdict\n";
    for (const auto& r : records) {
        out += std::to_string(r.n) + "," + std::to_string(r.m) + "," + class_name(r.graph_class) + "," +
               std::to_string(r.class_size) + "," + format_real(r.max_value.value()) + "," +
               format_real(r.predicted.value()) + "," + (r.unique() ? "true" : "false") + "," +
               (r.pass ? "pass" : "fail") + "\n";
    }
    return out;
}

std::string lemma_csv(const std::vector<LemmaReport>& lemmas) {
    std::string out = "lemma,instances,counterexamples,verdict\n";
    for (const auto& l : lemmas)
        out += l.lemma + "," + std::to_string(l.instances) + "," + std::to_string(l.counterexamples.size()) + "," +
               (l.pass() ? "pass" : "fail") + "\n";
    return out;
}

}  // namespace sombor
