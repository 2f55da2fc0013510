#pragma once

#include <iosfwd>
#include <vector>

#include "ngd/pulses.hpp"
#include "ngd/transfer.hpp"

namespace ngd {

enum class CascadeScaling { Fixed, InverseSqrtN };
enum class StageKind { NgdIdeal, NgdPractical };

/// n identical negative-delay stages; the per-stage time constant is either
/// the base T or T/sqrt(n).
struct CascadePlan {
    int n = 1;
    double T = 0.0; // base time constant, s
    CascadeScaling scaling = CascadeScaling::Fixed;
    StageKind stage = StageKind::NgdIdeal;
    double a = 0.0; // NgdPractical only
    double b = 0.0;

    double stage_time_constant() const;
    TransferFunction stage_transfer() const;
};

struct ApplyOptions {
    bool allow_unstable = false;
    int initial_pad_factor = 4; // doubled until wraparound passes, capped at 64
};

/// Frequency-domain application: inverse DFT of H(omega) * V(omega) on a
/// zero-padded grid. The output keeps the input's dt, t0 and length. Energy
/// leaking into the final pad quarter (circular wraparound) above 1e-8 of
/// the total triggers more padding, then WraparoundError at the cap.
Signal apply(const TransferFunction& tf, const Signal& sig, const ApplyOptions& opts = {});

/// Sequential stage application; returns the output after every stage.
std::vector<Signal> run_cascade(const CascadePlan& plan, const Signal& sig);

/// CSV serialization "t,stage0,...,stageN" where stage0 is the cascade input.
void write_cascade_csv(const Signal& input, const std::vector<Signal>& stages,
                       std::ostream& os);

} // namespace ngd
