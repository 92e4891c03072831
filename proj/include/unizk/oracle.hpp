#pragma once

#include <map>
#include <vector>

#include "unizk/bytes.hpp"
#include "unizk/hash.hpp"
#include "unizk/rng.hpp"

namespace unizk {

// Random oracle with the three access modes: query (lazily sampled uniform
// digests), programmability (distinct points only; a collision throws
// AlreadyDefined and is counted by the harness), and extractability (the full
// classical query transcript). Snapshots support classical forking: resuming
// from a snapshot replays every digest established before the fork point and
// samples freshly from there on.

struct OracleEvent {
    bool programmed;
    Bytes input;
    Digest digest;
};

struct OracleSnapshot {
    std::vector<OracleEvent> events;  // prefix of history, in order
};

class Oracle {
public:
    explicit Oracle(Rng rng) : rng_(rng) {}

    Digest query(const Bytes& input);
    void program(const Bytes& input, const Digest& digest);  // AlreadyDefined

    // ordered classical query transcript (repeat queries appear repeatedly)
    std::vector<Bytes> extract_queries() const;
    size_t query_count() const { return query_events_.size(); }

    // state as it was before the query_index-th query was answered
    OracleSnapshot snapshot(size_t query_index) const;
    static Oracle resume(const OracleSnapshot& snap, Rng fresh_rng);

    // index of the first query event establishing this input, if any
    bool find_first_query(const Bytes& input, size_t& query_index) const;

private:
    std::map<Bytes, Digest> table_;
    std::vector<OracleEvent> events_;
    std::vector<size_t> query_events_;  // positions of query events within events_
    Rng rng_;
};

} // namespace unizk
