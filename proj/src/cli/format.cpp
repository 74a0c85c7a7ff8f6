#include "format.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include <fmt/format.h>

namespace screw::cli {

double round_significant(double x, int digits) {
    if (std::abs(x) < 1e-12) {
        return 0.0;
    }
    const double r = std::stod(fmt::format("{:.{}g}", x, digits));
    return r == 0.0 ? 0.0 : r;
}

namespace {

Record rounded(const Record& r) {
    if (r.is_number_float()) {
        return round_significant(r.get<double>(), 12);
    }
    if (r.is_structured()) {
        Record out = r;
        for (auto it = out.begin(); it != out.end(); ++it) {
            *it = rounded(*it);
        }
        return out;
    }
    return r;
}

std::string scalar_text(const Record& r) {
    if (r.is_number_float()) {
        const double x = r.get<double>();
        return fmt::format("{:.6g}", std::abs(x) < 1e-12 ? 0.0 : x);
    }
    if (r.is_string()) {
        return r.get<std::string>();
    }
    if (r.is_null()) {
        return "none";
    }
    return r.dump();
}

bool is_flat_array(const Record& r) {
    if (!r.is_array()) {
        return false;
    }
    for (const auto& e : r) {
        if (e.is_structured()) {
            return false;
        }
    }
    return true;
}

std::string flat_text(const Record& r) {
    if (!is_flat_array(r)) {
        return scalar_text(r);
    }
    std::string s = "[";
    for (std::size_t i = 0; i < r.size(); ++i) {
        s += (i ? ", " : "") + scalar_text(r[i]);
    }
    return s + "]";
}

void human(std::ostream& out, const Record& r, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (r.is_object()) {
        for (const auto& [key, value] : r.items()) {
            if (value.is_structured() && !is_flat_array(value)) {
                out << pad << key << ":\n";
                human(out, value, indent + 2);
            } else {
                out << pad << key << ": " << flat_text(value) << "\n";
            }
        }
    } else if (r.is_array() && !is_flat_array(r)) {
        for (const auto& e : r) {
            out << pad << "-\n";
            human(out, e, indent + 2);
        }
    } else {
        out << pad << flat_text(r) << "\n";
    }
}

}  // namespace

void emit(std::ostream& out, const Record& record, OutputMode mode) {
    if (mode == OutputMode::Machine) {
        out << rounded(record).dump(2) << "\n";
    } else {
        human(out, record, 0);
    }
}

void emit_row(std::ostream& out, const Record& record, OutputMode mode) {
    if (mode == OutputMode::Machine) {
        out << rounded(record).dump() << "\n";
        return;
    }
    bool first = true;
    for (const auto& [key, value] : record.items()) {
        out << (first ? "" : " ") << key << "=" << flat_text(value);
        first = false;
    }
    out << "\n";
}

}  // namespace screw::cli
