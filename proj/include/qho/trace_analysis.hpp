#ifndef QHO_TRACE_ANALYSIS_HPP
#define QHO_TRACE_ANALYSIS_HPP

#include <string>

#include "qho/trace.hpp"

namespace qho {

enum class DetectionSignal { raw_current, derivative_magnitude };

struct PeakDetectConfig {
    // |dI/dV| suppresses the slow CB background the fast resonances ride on;
    // switch to raw_current for plain CB peak positions.
    DetectionSignal signal = DetectionSignal::derivative_magnitude;
    double min_prominence = 0.1;     // fraction of the detection-signal range
    double min_separation_mv = 1.0;
    bool detrend = false;            // moving-median background removal
    double detrend_window_mv = 0.0;  // typically 5x the expected fast period
};

struct PeakSet {
    std::vector<double> positions_mv;  // strictly increasing, refined sub-step
    std::vector<double> spacings_mv;   // consecutive differences
    double mean_spacing_mv;            // mean over all spacings (NaN if < 2 peaks)
    double first_gap_mv;               // spacings[0] (NaN if < 2 peaks)
    double first_gap_ratio;            // first gap / mean of the later spacings
                                       // (NaN unless >= 3 peaks)

    std::size_t count() const { return positions_mv.size(); }
};

struct SpacingStats {
    double mean_mv;
    double stddev_mv;
    double first_gap_mv;
    double ratio;  // first gap / mean of the remaining spacings
};

// Local maxima of the detection signal passing prominence and separation
// thresholds; positions refined by parabolic interpolation of the three
// samples around each maximum. An empty result is valid.
PeakSet find_peaks(const Trace& trace, const PeakDetectConfig& config);

// Statistics over consecutive spacings; needs >= 3 peaks, otherwise throws
// insufficient_data_error.
SpacingStats spacing_stats(const PeakSet& peaks);

// C_g = e / period, in aF; period in mV > 0.
double capacitance_from_period_af(double period_mv);

// f = E / h, in THz; energy in meV > 0.
double energy_to_frequency_thz(double energy_mev);

// PeakSet with statistics as JSON (schema-stable keys).
std::string peakset_to_json(const PeakSet& peaks);
void write_peakset_json(const PeakSet& peaks, const std::string& path);

} // namespace qho

#endif
