#ifndef BLOWUP_REPORT_IO_HPP
#define BLOWUP_REPORT_IO_HPP

#include <string>

#include "blowup/invariants.hpp"
#include "blowup/strata.hpp"
#include "blowup/verify.hpp"

namespace blowup {

// All machine output goes through these renderers; JSON field order is fixed
// by construction so identical inputs give byte-identical output.
std::string report_json(const InvariantReport& r);
std::string report_table(const InvariantReport& r);

std::string verify_json(const VerifyOutcome& o);
std::string verify_table(const VerifyOutcome& o);

std::string spectrum_json(const SpectrumResult& s);
std::string spectrum_table(const SpectrumResult& s);

std::string strata_json(const StrataTable& t);
std::string strata_csv(const StrataTable& t);
std::string strata_table(const StrataTable& t);

}  // namespace blowup

#endif
