#pragma once

#include "delsarte/surface.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace delsarte {

// least matrix over simultaneous row (monomial) and column (variable)
// permutations, comparing row-major; rows are freely sortable so this is
// the minimum over the 24 column permutations of the row-sorted matrix
ExponentMatrix canonical_form(const ExponentMatrix& a);

struct CandidateRecord {
    ExponentMatrix canonical{};
    long m = 0;
    long lambda = 0;
    long h20 = 0;
    std::optional<long> picard;
    std::string flags;  // "ok", "worse-than-rdp", ...

    std::string polynomial_string() const;
};

CandidateRecord classify_candidate(const ExponentMatrix& canonical);

// every 4-subset of the degree-d monomials that uses all four variables,
// shares no common variable, and has nonsingular exponent matrix,
// deduplicated by canonical form; sorted
std::vector<ExponentMatrix> candidates(long degree);

struct EnumerationResult {
    long degree = 0;
    std::size_t subsets_total = 0;       // 4-subsets of monomials before filtering
    std::size_t candidates_canonical = 0;
    std::vector<CandidateRecord> records;  // sorted by canonical matrix

    // rho value -> first witness record index
    std::map<long, std::size_t> picard_spectrum() const;
    std::vector<const CandidateRecord*> with_picard(long rho) const;
};

// full enumeration; thread count 0 means use DELSARTE_THREADS or the
// hardware default; previously classified records (e.g. from a partial
// results file) are reused instead of being recomputed
EnumerationResult run_enumeration(long degree, unsigned threads = 0,
                                  const std::vector<CandidateRecord>* prior = nullptr);

// tab-separated records: 16 matrix entries, m, lambda, h20, rho or "-", flags
void write_results_file(std::ostream& os, const EnumerationResult& r);
// a file without the end marker is a partial run; only readable with
// allow_partial = true
EnumerationResult read_results_file(std::istream& is, bool allow_partial = false);

unsigned worker_count(unsigned requested);

}  // namespace delsarte
