#pragma once

#include <string>
#include <vector>

#include "gaussdef/functionals.hpp"
#include "gaussdef/transport.hpp"
#include "gaussdef/verdicts.hpp"

namespace gaussdef {

// every CSV numeric field carries 17 significant digits
std::string fmt17(double x);

// fixed sweep schema: s,t,k,I,H,delta,m{p}...,l{p},log_l{p}...,w{p}...,
// delta_tal,err_I,err_H
std::string sweep_csv_header(const std::vector<double>& moment_ps,
                             const std::vector<double>& lp_ps,
                             const std::vector<double>& wass_ps);
std::string sweep_csv_row(const SweepRow& row,
                          const std::vector<double>& moment_ps,
                          const std::vector<double>& lp_ps,
                          const std::vector<double>& wass_ps);

std::string functional_report_json(const FunctionalReport& rep);

// transport rows keyed by (s, t, k)
std::string transport_csv_header();
std::string transport_csv_row(double s, double t, double k,
                              const TransportReport& rep);
std::string transport_report_json(double s, double t, double k,
                                  const TransportReport& rep);

}  // namespace gaussdef
