#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "krawtchouk/exact.hpp"

namespace krawtchouk {

struct IdentityFailure {
    std::string relation;
    std::string params;  // e.g. "N=5 r=3/7 n=2 j=1"
    ExactRational lhs;
    ExactRational rhs;
};

/// Outcome of a batch of exact equality checks. Stored failures are capped,
/// the failure count is not.
class IdentityReport {
public:
    static constexpr std::size_t kDefaultFailureCap = 100;

    explicit IdentityReport(std::string suite, std::size_t failure_cap = kDefaultFailureCap)
        : suite_(std::move(suite)), failure_cap_(failure_cap) {}

    bool check(std::string_view relation, std::string params, const ExactRational& lhs,
               const ExactRational& rhs) {
        ++cases_;
        if (lhs == rhs) return true;
        ++failure_count_;
        if (failures_.size() < failure_cap_)
            failures_.push_back({std::string(relation), std::move(params), lhs, rhs});
        return false;
    }

    bool check(std::string_view relation, std::string params, bool holds) {
        return check(relation, std::move(params), ExactRational(holds ? 1 : 0), ExactRational(1));
    }

    void merge(const IdentityReport& other) {
        cases_ += other.cases_;
        failure_count_ += other.failure_count_;
        for (const auto& f : other.failures_) {
            if (failures_.size() >= failure_cap_) break;
            failures_.push_back(f);
        }
    }

    const std::string& suite() const { return suite_; }
    std::size_t cases() const { return cases_; }
    std::size_t failure_count() const { return failure_count_; }
    const std::vector<IdentityFailure>& failures() const { return failures_; }
    bool passed() const { return failure_count_ == 0; }

private:
    std::string suite_;
    std::size_t failure_cap_;
    std::size_t cases_ = 0;
    std::size_t failure_count_ = 0;
    std::vector<IdentityFailure> failures_;
};

}  // namespace krawtchouk
