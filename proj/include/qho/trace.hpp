#ifndef QHO_TRACE_HPP
#define QHO_TRACE_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace qho {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct insufficient_data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sampled sweep: x strictly increasing, equal-length columns.
struct Trace {
    std::vector<double> x_mv;
    std::vector<double> y_pa;
    std::string x_label = "v_g_mv";
    std::string y_label = "current_pa";
    std::string descriptor;  // free-form sweep metadata

    std::size_t size() const { return x_mv.size(); }
};

// Throws std::invalid_argument on length mismatch or non-increasing x.
void validate(const Trace& trace);

// CSV export: one header line "<x_label>,<y_label>", then full-precision rows.
void write_trace_csv(const Trace& trace, const std::string& path);

// JSON export with labels, descriptor and both columns.
void write_trace_json(const Trace& trace, const std::string& path);

// CSV import: two numeric columns, optional header (labels taken from it).
// Rows that fail to parse raise parse_error naming the line number; fewer
// than 3 points raises insufficient_data_error. If x arrives unsorted the
// rows are sorted and *resorted is set.
Trace import_trace_csv(const std::string& path, bool* resorted = nullptr);

} // namespace qho

#endif
