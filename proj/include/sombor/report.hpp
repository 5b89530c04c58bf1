#pragma once

#include "sombor/verify.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace sombor {

/// Sorted [radicand, multiplicity] pairs.
nlohmann::json to_json(const RadicalSum& s);
nlohmann::json to_json(const ExtremalRecord& r);
nlohmann::json to_json(const LemmaReport& r);

/// Everything one verification run produced.
struct VerificationReport {
    std::vector<ExtremalRecord> records;
    std::vector<ClassTotal> totals;
    std::vector<LemmaReport> lemmas;

    void add(const TheoremReport& t);
    bool pass() const;
};

nlohmann::json to_json(const VerificationReport& r);

/// Header: n,m,class,class_size,max_float,predicted_float,unique,verdict
std::string extremal_csv(const std::vector<ExtremalRecord>& records);
/// Header: lemma,instances,counterexamples,verdict
std::string lemma_csv(const std::vector<LemmaReport>& lemmas);

std::string format_real(double x);

}  // namespace sombor
