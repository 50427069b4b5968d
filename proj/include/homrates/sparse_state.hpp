#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "homrates/math_util.hpp"
#include "homrates/occupation.hpp"

namespace homrates {

// Sparse four-mode Fock state with real amplitudes, stored as a flat vector
// sorted by occupation. Immutable after construction; safe to share across
// threads. Invariants: no zero amplitudes, no duplicate occupations,
// sum |amplitude|^2 <= 1 (truncation only removes weight).
class SparseState {
public:
    struct Term {
        Occupation4 occ;
        double amplitude;
    };

    SparseState() = default;

    int truncation_order() const { return truncation_order_; }
    double norm_squared() const { return norm_squared_; }
    double norm_deficit() const { return norm_deficit_; }
    std::size_t size() const { return terms_.size(); }
    std::span<const Term> terms() const { return terms_; }

    // 0.0 for occupations not present
    double amplitude_of(const Occupation4& occ) const;

private:
    friend SparseState make_state(std::vector<std::pair<Occupation4, double>> entries,
                                  int truncation_order);
    friend class StateBuilder;

    std::vector<Term> terms_;
    int truncation_order_ = 0;
    double norm_squared_ = 0.0;
    double norm_deficit_ = 1.0;
};

// Validating factory: rejects negative counts, occupations above 2*truncation_order,
// duplicate occupations, and norms above 1. Zero amplitudes are dropped.
SparseState make_state(std::vector<std::pair<Occupation4, double>> entries,
                       int truncation_order);

// sum over terms of |amplitude|^2 * f(occupation), compensated
template <typename F>
double expectation(const SparseState& state, F&& f) {
    NeumaierSum acc;
    for (const auto& t : state.terms())
        acc.add(t.amplitude * t.amplitude * static_cast<double>(f(t.occ)));
    return acc.value();
}

// Internal accumulation helper for expansion code that emits collision-free
// term streams. finish() sorts, validates uniqueness, and seals the state.
class StateBuilder {
public:
    StateBuilder(int truncation_order, std::size_t max_terms);

    void push(const Occupation4& occ, double amplitude);  // drops exact zeros
    SparseState finish();

private:
    std::vector<SparseState::Term> terms_;
    int truncation_order_;
    std::size_t max_terms_;
};

}  // namespace homrates
