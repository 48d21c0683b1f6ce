#include "delsarte/enumerate.hpp"

#include "delsarte/matrix.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace delsarte {

namespace {

constexpr int kColPerms[24][4] = {
    {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {0, 3, 2, 1},
    {1, 0, 2, 3}, {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 2, 3, 0}, {1, 3, 0, 2}, {1, 3, 2, 0},
    {2, 0, 1, 3}, {2, 0, 3, 1}, {2, 1, 0, 3}, {2, 1, 3, 0}, {2, 3, 0, 1}, {2, 3, 1, 0},
    {3, 0, 1, 2}, {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 1, 2, 0}, {3, 2, 0, 1}, {3, 2, 1, 0}};

long det4_long(const ExponentMatrix& a) {
    long d = 0;
    for (int p = 0; p < 24; ++p) {
        const int* c = kColPerms[p];
        long term = a[0][c[0]] * a[1][c[1]] * a[2][c[2]] * a[3][c[3]];
        // permutation parity: count inversions
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (c[i] > c[j]) ++inv;
        d += (inv % 2 == 0) ? term : -term;
    }
    return d;
}

}  // namespace

ExponentMatrix canonical_form(const ExponentMatrix& a) {
    ExponentMatrix best{};
    bool have = false;
    for (int p = 0; p < 24; ++p) {
        const int* c = kColPerms[p];
        ExponentMatrix t;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) t[i][j] = a[i][c[j]];
        std::sort(t.begin(), t.end());
        if (!have || t < best) {
            best = t;
            have = true;
        }
    }
    return best;
}

std::string CandidateRecord::polynomial_string() const {
    return DelsarteSurface::from_exponents(canonical).polynomial_string();
}

CandidateRecord classify_candidate(const ExponentMatrix& canonical) {
    CandidateRecord rec;
    rec.canonical = canonical;
    DelsarteSurface s = DelsarteSurface::from_exponents(canonical);
    DelsarteAnalysis an = analyze(s);
    rec.m = an.covering.m;
    rec.lambda = an.lambda;
    rec.h20 = an.h20;
    rec.picard = an.picard;
    rec.flags = an.picard ? "ok" : (an.h20 < 4 ? "worse-than-rdp" : "h20-above-4");
    return rec;
}

namespace {

std::vector<std::array<long, 4>> monomials_of_degree(long d) {
    std::vector<std::array<long, 4>> out;
    for (long i = 0; i <= d; ++i)
        for (long j = 0; i + j <= d; ++j)
            for (long k = 0; i + j + k <= d; ++k) out.push_back({i, j, k, d - i - j - k});
    return out;
}

bool passes_filters(const ExponentMatrix& a) {
    for (int j = 0; j < 4; ++j) {
        bool all = true, any = false;
        for (int i = 0; i < 4; ++i) {
            all = all && a[i][j] > 0;
            any = any || a[i][j] > 0;
        }
        if (all || !any) return false;  // common variable / unused variable
    }
    return det4_long(a) != 0;
}

}  // namespace

std::vector<ExponentMatrix> candidates(long degree) {
    if (degree < 1) throw std::invalid_argument("candidates: degree must be >= 1");
    const auto monos = monomials_of_degree(degree);
    const std::size_t n = monos.size();
    std::set<ExponentMatrix> seen;
    ExponentMatrix a;
    for (std::size_t i0 = 0; i0 < n; ++i0) {
        a[0] = monos[i0];
        for (std::size_t i1 = i0 + 1; i1 < n; ++i1) {
            a[1] = monos[i1];
            for (std::size_t i2 = i1 + 1; i2 < n; ++i2) {
                a[2] = monos[i2];
                for (std::size_t i3 = i2 + 1; i3 < n; ++i3) {
                    a[3] = monos[i3];
                    if (!passes_filters(a)) continue;
                    seen.insert(canonical_form(a));
                }
            }
        }
    }
    return {seen.begin(), seen.end()};
}

unsigned worker_count(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("DELSARTE_THREADS")) {
        long v = std::atol(env);
        if (v > 0) return static_cast<unsigned>(std::min(v, 256L));
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

EnumerationResult run_enumeration(long degree, unsigned threads,
                                  const std::vector<CandidateRecord>* prior) {
    EnumerationResult result;
    result.degree = degree;
    const auto monos = monomials_of_degree(degree);
    std::size_t n = monos.size();
    result.subsets_total = n * (n - 1) * (n - 2) * (n - 3) / 24;

    std::vector<ExponentMatrix> cands = candidates(degree);
    result.candidates_canonical = cands.size();
    result.records.resize(cands.size());

    std::map<ExponentMatrix, const CandidateRecord*> known;
    if (prior)
        for (const CandidateRecord& r : *prior) known[r.canonical] = &r;

    const unsigned nthreads = std::min<unsigned>(worker_count(threads),
                                                 std::max<std::size_t>(cands.size(), 1));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::mutex err_mutex;
    std::string first_error;
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= cands.size()) break;
            try {
                auto k = known.find(cands[i]);
                result.records[i] = k != known.end() ? *k->second : classify_candidate(cands[i]);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (first_error.empty())
                    first_error = DelsarteSurface::from_exponents(cands[i]).polynomial_string() +
                                  ": " + e.what();
            }
        }
    };
    for (unsigned t = 0; t + 1 < nthreads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (!first_error.empty()) throw std::runtime_error("enumeration failed: " + first_error);
    return result;
}

std::map<long, std::size_t> EnumerationResult::picard_spectrum() const {
    std::map<long, std::size_t> spectrum;
    for (std::size_t i = 0; i < records.size(); ++i)
        if (records[i].picard && !spectrum.count(*records[i].picard)) spectrum[*records[i].picard] = i;
    return spectrum;
}

std::vector<const CandidateRecord*> EnumerationResult::with_picard(long rho) const {
    std::vector<const CandidateRecord*> out;
    for (const CandidateRecord& r : records)
        if (r.picard && *r.picard == rho) out.push_back(&r);
    return out;
}

void write_results_file(std::ostream& os, const EnumerationResult& r) {
    os << "# delsarte enumeration degree=" << r.degree << " subsets=" << r.subsets_total
       << " candidates=" << r.candidates_canonical << "\n";
    for (const CandidateRecord& rec : r.records) {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) os << rec.canonical[i][j] << "\t";
        os << rec.m << "\t" << rec.lambda << "\t" << rec.h20 << "\t";
        if (rec.picard) os << *rec.picard;
        else os << "-";
        os << "\t" << rec.flags << "\n";
    }
    os << "# end records=" << r.records.size() << "\n";
}

EnumerationResult read_results_file(std::istream& is, bool allow_partial) {
    EnumerationResult r;
    std::string line;
    bool complete = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line);
            std::string hash, word;
            hs >> hash >> word;
            if (word == "delsarte") {
                std::string kv;
                while (hs >> kv) {
                    auto eq = kv.find('=');
                    if (eq == std::string::npos) continue;
                    std::string key = kv.substr(0, eq);
                    long val = std::atol(kv.c_str() + eq + 1);
                    if (key == "degree") r.degree = val;
                    else if (key == "subsets") r.subsets_total = val;
                    else if (key == "candidates") r.candidates_canonical = val;
                }
            } else if (word == "end") {
                complete = true;
            }
            continue;
        }
        std::istringstream ls(line);
        CandidateRecord rec;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (!(ls >> rec.canonical[i][j]))
                    throw std::runtime_error("results file: bad matrix entry");
        std::string rho;
        if (!(ls >> rec.m >> rec.lambda >> rec.h20 >> rho >> rec.flags))
            throw std::runtime_error("results file: truncated record");
        if (rho != "-") rec.picard = std::atol(rho.c_str());
        r.records.push_back(rec);
    }
    if (!complete && !allow_partial) throw std::runtime_error("results file: missing end marker");
    return r;
}

}  // namespace delsarte
