#pragma once

#include <optional>
#include <string>
#include <vector>

#include <ordmap/conjecture.hpp>
#include <ordmap/existence.hpp>
#include <ordmap/linear_map.hpp>
#include <ordmap/spectrum.hpp>

namespace ordmap::cli {

enum class OutputFormat { Table, Csv, Json };

std::optional<OutputFormat> format_from_name(const std::string& name);

std::string render_spectrum(const GroupSpec& g, const OrderSpectrum& spectrum, OutputFormat f);

std::string render_report(const VerificationReport& report, OutputFormat f);

// Feasibility output; spectra are needed to describe the Hall violator.
// realization, when present, appends the element-level pairing.
std::string render_existence(const GroupSpec& src, const GroupSpec& dst,
                             const OrderSpectrum& src_spectrum, const OrderSpectrum& dst_spectrum,
                             const ExistenceCertificate& cert,
                             const std::optional<PairingTable>& realization, OutputFormat f);

std::string render_sweep(const std::vector<ConjectureReport>& reports, OutputFormat f);

}  // namespace ordmap::cli
