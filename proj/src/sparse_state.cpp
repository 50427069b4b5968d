#include "homrates/sparse_state.hpp"

#include <algorithm>
#include <cmath>

#include "homrates/errors.hpp"

namespace homrates {

namespace {

// tolerance for "norm must not exceed 1": allows rounding from log-space
// amplitude assembly, still catches genuinely unnormalized input
constexpr double kNormSlack = 1e-9;

void seal(std::vector<SparseState::Term>& terms, int truncation_order,
          double& norm_squared, double& norm_deficit) {
    std::sort(terms.begin(), terms.end(),
              [](const SparseState::Term& a, const SparseState::Term& b) { return a.occ < b.occ; });
    for (std::size_t i = 1; i < terms.size(); ++i)
        if (terms[i].occ == terms[i - 1].occ)
            throw InvalidArgumentError("duplicate occupation " + to_string(terms[i].occ));
    NeumaierSum n2;
    for (const auto& t : terms) {
        if (t.occ.j < 0 || t.occ.k < 0 || t.occ.l < 0 || t.occ.m < 0)
            throw InvalidArgumentError("negative occupation " + to_string(t.occ));
        if (t.occ.total() > 2 * truncation_order)
            throw InvalidArgumentError("occupation " + to_string(t.occ) +
                                       " exceeds 2*N_max = " + std::to_string(2 * truncation_order));
        n2.add(t.amplitude * t.amplitude);
    }
    norm_squared = n2.value();
    if (norm_squared > 1.0 + kNormSlack)
        throw InvalidArgumentError("state norm^2 = " + std::to_string(norm_squared) + " exceeds 1");
    norm_deficit = std::max(0.0, 1.0 - norm_squared);
}

}  // namespace

double SparseState::amplitude_of(const Occupation4& occ) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), occ,
                               [](const Term& t, const Occupation4& o) { return t.occ < o; });
    if (it != terms_.end() && it->occ == occ) return it->amplitude;
    return 0.0;
}

SparseState make_state(std::vector<std::pair<Occupation4, double>> entries, int truncation_order) {
    if (truncation_order < 0)
        throw InvalidArgumentError("truncation order must be >= 0");
    SparseState s;
    s.truncation_order_ = truncation_order;
    s.terms_.reserve(entries.size());
    for (const auto& [occ, amp] : entries) {
        if (!std::isfinite(amp))
            throw InvalidArgumentError("non-finite amplitude at " + to_string(occ));
        if (amp != 0.0) s.terms_.push_back({occ, amp});
    }
    seal(s.terms_, truncation_order, s.norm_squared_, s.norm_deficit_);
    return s;
}

StateBuilder::StateBuilder(int truncation_order, std::size_t max_terms)
    : truncation_order_(truncation_order), max_terms_(max_terms) {}

void StateBuilder::push(const Occupation4& occ, double amplitude) {
    if (amplitude == 0.0) return;
    if (terms_.size() >= max_terms_)
        throw CapacityError("state term budget of " + std::to_string(max_terms_) + " exceeded");
    terms_.push_back({occ, amplitude});
}

SparseState StateBuilder::finish() {
    SparseState s;
    s.truncation_order_ = truncation_order_;
    s.terms_ = std::move(terms_);
    seal(s.terms_, truncation_order_, s.norm_squared_, s.norm_deficit_);
    return s;
}

}  // namespace homrates
