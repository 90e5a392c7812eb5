#pragma once
/*
Per-round run records and their CSV serialization.

A trace stores, for every round, the mixture over live instances, the played
action, the realized loss and each live instance's own loss, which is enough
to reconstruct every regret quantity offline. finalize() builds prefix sums so
cumulative loss over any interval is O(1).
*/

#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "saol/core.hpp"
#include "saol/intervals.hpp"

namespace saol {

// Fixed-width float formatting shared by all writers; round-trips doubles and
// is byte-stable across reruns.
inline std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

struct SlotRecord {
    DyadicInterval interval;
    double probability = 0.0; // p_t(I)
    double weight = 0.0;      // w_t(I) backing p_t
    double loss = 0.0;        // loss of the instance's own prediction
};

struct TraceRecord {
    std::int64_t t = 0;
    std::optional<DyadicInterval> chosen; // drawn instance; empty in expected mode
    double realized_loss = 0.0;
    double total_weight = 0.0; // W_t; 0 for bare base learners
    double potential = 0.0;    // pseudo-weight total; NaN when diagnostics are off
    Decision action;
    std::vector<SlotRecord> slots; // live instances, increasing level; empty for base learners
};

struct TraceMetadata {
    std::string scenario;  // "experts" | "oco"
    std::string algorithm; // "mw" | "ogd" | "saol-mw" | "saol-ogd"
    std::string mode;      // "sample" | "expected"
    std::int64_t arms = 0; // experts scenario
    std::int64_t dimension = 0;
    double diameter = 0.0;
    double lipschitz = 0.0;
    std::uint64_t seed = 0;
};

class Trace {
public:
    TraceMetadata meta;

    void push(TraceRecord record) {
        if (record.t != static_cast<std::int64_t>(records_.size()) + 1)
            throw std::invalid_argument("Trace::push: rounds must be consecutive from 1");
        if (record.realized_loss < -kLossRangeTol || record.realized_loss > 1.0 + kLossRangeTol)
            throw std::domain_error("Trace::push: realized loss outside [0,1]");
        records_.push_back(std::move(record));
        finalized_ = false;
    }

    const std::vector<TraceRecord>& records() const { return records_; }
    std::int64_t horizon() const { return static_cast<std::int64_t>(records_.size()); }

    const TraceRecord& record(std::int64_t t) const {
        check_range(t, t);
        return records_[static_cast<std::size_t>(t - 1)];
    }

    void finalize() {
        prefix_.assign(records_.size() + 1, 0.0);
        for (std::size_t i = 0; i < records_.size(); ++i)
            prefix_[i + 1] = prefix_[i] + records_[i].realized_loss;
        finalized_ = true;
    }

    // Sum of realized losses over rounds [start,end], O(1) once finalized.
    double cumulative_loss(std::int64_t start, std::int64_t end) const {
        check_range(start, end);
        if (!finalized_) throw std::logic_error("Trace: call finalize() before cumulative_loss");
        return prefix_[static_cast<std::size_t>(end)] - prefix_[static_cast<std::size_t>(start - 1)];
    }

private:
    void check_range(std::int64_t start, std::int64_t end) const {
        if (start < 1 || end < start || end > horizon())
            throw std::out_of_range("Trace: interval outside recorded horizon");
    }

    std::vector<TraceRecord> records_;
    std::vector<double> prefix_;
    bool finalized_ = false;
};

inline double mixture_entropy_bits(const std::vector<SlotRecord>& slots) {
    double entropy = 0.0;
    for (const SlotRecord& slot : slots)
        if (slot.probability > 0.0)
            entropy -= slot.probability * std::log2(slot.probability);
    return entropy;
}

inline void write_trace_csv(const Trace& trace, std::ostream& out) {
    out << "t,chosen_interval_q,chosen_interval_s,realized_loss,n_active,entropy_of_p_t\n";
    for (const TraceRecord& record : trace.records()) {
        const std::int64_t q = record.chosen ? record.chosen->start : 0;
        const std::int64_t s = record.chosen ? record.chosen->end : 0;
        out << record.t << ',' << q << ',' << s << ',' << format_double(record.realized_loss)
            << ',' << record.slots.size() << ',' << format_double(mixture_entropy_bits(record.slots))
            << '\n';
    }
}

inline void write_trace_metadata(const Trace& trace, std::ostream& out) {
    const TraceMetadata& meta = trace.meta;
    out << "scenario=" << meta.scenario << '\n';
    if (meta.scenario == "experts") {
        out << "N=" << meta.arms << '\n';
    } else {
        out << "d=" << meta.dimension << '\n';
        out << "B=" << format_double(meta.diameter) << '\n';
        out << "G=" << format_double(meta.lipschitz) << '\n';
    }
    out << "seed=" << meta.seed << '\n';
    out << "mode=" << meta.mode << '\n';
    out << "algorithm=" << meta.algorithm << '\n';
}

} // namespace saol
