#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tnt/search.hpp"
#include "tnt/serialize.hpp"

namespace tnt {

/// Bumped whenever an algorithm change could alter cached values.
inline constexpr const char* kToolVersion = "tnt-1.0.0";

class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CacheKey {
    int n = 0;
    MultipartitePattern h;
    MultipartitePattern f;
    Engine engine = Engine::exhaustive;
    std::uint64_t seed = 0; ///< heuristic only
    long budget = 0;        ///< heuristic only

    /// Canonical text form; also stored inside the entry and compared on load.
    std::string text() const;
};

struct CacheEntry {
    CacheKey key;
    SearchResult value;
    std::string created_at; ///< UTC, ISO 8601
    std::string tool_version;
};

/// Directory of JSON files, one per key, named by a hash of the key text and
/// the tool version. Writes go to a temporary file renamed into place.
class ResultCache {
public:
    /// Creates the directory if needed; throws CacheError when it cannot be
    /// created or written.
    explicit ResultCache(std::filesystem::path dir);

    const std::filesystem::path& dir() const noexcept { return dir_; }

    /// A stored entry whose key and tool version match and whose
    /// certificates re-verify; anything else is treated as absent.
    std::optional<SearchResult> load(const CacheKey& key);
    void store(const CacheKey& key, const SearchResult& value);

    /// Cached value, or runs the search and stores the result.
    SearchResult get_or_compute(int n, const MultipartitePattern& h, const MultipartitePattern& f,
                                const SearchOptions& opts);

    std::filesystem::path path_for(const CacheKey& key) const;

    long hits() const noexcept { return hits_; }
    long misses() const noexcept { return misses_; }
    /// Entries found on disk but rejected by revalidation.
    long rejected() const noexcept { return rejected_; }

private:
    std::filesystem::path dir_;
    std::atomic<long> hits_{0};
    std::atomic<long> misses_{0};
    std::atomic<long> rejected_{0};
};

enum class ClaimKind { exact_value, lower_bound, upper_bound, structure, asymptotic_witness };
enum class ClaimStatus { verified, verified_from_threshold, mismatch, skipped };

std::string to_string(ClaimKind k);
std::string to_string(ClaimStatus s);

/// One n of a claim's evidence table.
struct EvidenceRow {
    int n = 0;
    Count value = 0;
    std::optional<Count> reference;
    bool holds = true;
    std::string note;
};

struct ClaimRecord {
    std::string claim_id;
    std::vector<int> params;
    std::pair<int, int> n_range{0, 0};
    ClaimKind kind = ClaimKind::exact_value;
    ClaimStatus status = ClaimStatus::skipped;
    std::optional<int> threshold; ///< n* for verified_from_threshold
    std::string details;
    std::vector<EvidenceRow> rows;
    std::string counterexample; ///< graph6 certificate on mismatch
};

void to_json(Json& j, const EvidenceRow& r);
void to_json(Json& j, const ClaimRecord& r);

struct ClaimCase {
    std::vector<int> params;
    std::pair<int, int> n_range;
};

struct HarnessConfig {
    int n_max = 9;
    unsigned workers = 1;
    std::uint64_t seed = 0;
};

/// Registered claim ids, in suite order.
std::vector<std::string> registered_claims();
/// Parameter sets the suite runs for a claim.
std::vector<ClaimCase> default_cases(const std::string& claim_id);

/// Throws InputError for an unknown id. Parameters outside the claim's
/// hypothesis give status skipped; exhaustive searches are clipped to
/// config.n_max and served from `cache` when given.
ClaimRecord run_claim(const std::string& claim_id, const std::vector<int>& params, std::pair<int, int> n_range,
                      ResultCache* cache, const HarnessConfig& config = {});

struct SuiteReport {
    std::vector<ClaimRecord> records;
    bool any_mismatch = false;
};

/// Runs the default cases of every claim whose id matches the shell glob
/// `filter`.
SuiteReport run_suite(const std::string& filter, int n_max, const std::filesystem::path& cache_dir,
                      unsigned workers = 1);

Json suite_json(const SuiteReport& report);
/// Columns claim_id, params, n, value, reference_value, status.
std::string suite_csv(const SuiteReport& report);

} // namespace tnt
