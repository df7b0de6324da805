// Regenerates tests/fixtures/soliton_reference.csv:
//   soliton_reference 1024 > tests/fixtures/soliton_reference.csv
#include <cstdlib>
#include <iostream>

#include "soliton_cases.hpp"

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 1024;
  std::cout << "label,n,t,count,median_width,max_amplitude,max_abs_gradient\n";
  for (const auto& c : soliton_cases::cases(n)) {
    const auto r = soliton_cases::evaluate(c, n);
    std::cout << r.label << "," << r.n << "," << mhdtriad::format_double(r.t) << "," << r.count << ","
              << mhdtriad::format_double(r.median_width) << "," << mhdtriad::format_double(r.max_amplitude) << ","
              << mhdtriad::format_double(r.max_abs_gradient) << std::endl;
  }
}
