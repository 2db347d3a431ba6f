#pragma once

// JSON and CSV renderings of engine results. Output is deterministic: keys are
// emitted in a fixed order and doubles in shortest round-trip form.

#include <string>
#include <vector>

#include "hurwitz/expansion.hpp"
#include "hurwitz/pressure.hpp"
#include "hurwitz/schedule.hpp"
#include "hurwitz/tau.hpp"
#include "hurwitz/threshold.hpp"

namespace hurwitz {

/// [[re, im], ...]
std::string digits_to_json(const DigitWord& word);
/// Accepts [[re, im], ...]; throws ParseError.
DigitWord digits_from_json(const std::string& text);

std::string expansion_to_json(const GaussianRational& input, const ExpansionResult& result, bool roundtrip_ok);
std::string pressure_to_json(const PressureEstimate& e);
std::string pressure_to_csv(const std::vector<PressureEstimate>& rows);
std::string bowen_to_json(const BowenDimResult& r);
std::string threshold_to_json(const ThresholdResult& r);
std::string tau_to_json(const TauEstimate& t);
std::string tau_trajectory_csv(const TauEstimate& t);
std::string schedule_to_json(const NonAutSchedule& s, const std::vector<ScheduleCheck>& checks);
std::string chain_to_json(const LowerBoundChain& c);
std::string subexp_to_csv(const SubexpReport& r);

}  // namespace hurwitz
