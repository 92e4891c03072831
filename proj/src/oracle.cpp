#include "unizk/oracle.hpp"

#include <stdexcept>

#include "unizk/errors.hpp"

namespace unizk {

Digest Oracle::query(const Bytes& input) {
    Digest d;
    auto it = table_.find(input);
    if (it != table_.end()) {
        d = it->second;
    } else {
        rng_.fill(d.data(), d.size());
        table_.emplace(input, d);
    }
    query_events_.push_back(events_.size());
    events_.push_back(OracleEvent{false, input, d});
    return d;
}

void Oracle::program(const Bytes& input, const Digest& digest) {
    if (table_.count(input)) throw AlreadyDefined("oracle point already answered");
    table_.emplace(input, digest);
    events_.push_back(OracleEvent{true, input, digest});
}

std::vector<Bytes> Oracle::extract_queries() const {
    std::vector<Bytes> qs;
    qs.reserve(query_events_.size());
    for (size_t i : query_events_) qs.push_back(events_[i].input);
    return qs;
}

OracleSnapshot Oracle::snapshot(size_t query_index) const {
    if (query_index >= query_events_.size()) throw std::out_of_range("snapshot: no such query");
    size_t cut = query_events_[query_index];
    OracleSnapshot snap;
    snap.events.assign(events_.begin(), events_.begin() + cut);
    return snap;
}

Oracle Oracle::resume(const OracleSnapshot& snap, Rng fresh_rng) {
    Oracle o(fresh_rng);
    for (const auto& ev : snap.events) {
        // replay fixes the same digests without consuming fresh randomness
        o.table_.emplace(ev.input, ev.digest);
        if (!ev.programmed) o.query_events_.push_back(o.events_.size());
        o.events_.push_back(ev);
    }
    return o;
}

bool Oracle::find_first_query(const Bytes& input, size_t& query_index) const {
    for (size_t i = 0; i < query_events_.size(); i++) {
        if (events_[query_events_[i]].input == input) {
            query_index = i;
            return true;
        }
    }
    return false;
}

} // namespace unizk
