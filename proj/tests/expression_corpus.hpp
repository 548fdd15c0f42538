#pragma once

#include <string>
#include <vector>

namespace ratsemi::testing {

inline const std::vector<std::string>& expression_corpus() {
  static const std::vector<std::string> corpus{
      "2*z - 1/z",
      "(z^2-1)/(2*z)",
      "((z^2-1)/(z^2+1))",
      "(z-1)/(z+1)",
      "(3z+5z^2)/(1+3z+4z^2)",
      "(5*z^2+3*z)/(4*z^2+3*z+1)",
      "2*z^2-1",
      "(5z^2+40z-29)/(3z^2+40z-27)",
      "(37*z^2-24*z+3)/(35*z^2-24*z+5)",
      "2z-4/z",
      "(2*z^2-4)/z",
      "z^2-2",
      "4z^2-2",
      "4*(z+5)^2-2-5",
      "z^3-3z",
      "z^2",
      "z^3",
      "z",
      "2*z",
      "1/2*z - 1/(2*z)",
      "(4*z^4-4*z^2+1)/z^2",
      "(8z^4-9z^2+2)/(2z^3-z)",
      "z - 3*z/(z^2-4)",
      "2*z - 1/z - 3*z/(z^2 - 9/4)",
      "z^2 + z",
      "-z^2",
      "-(z^2)",
      "--z",
      "z*-2",
      "z--z",
      "1.5*z^2 - 0.25",
      "0.125z",
      "10.0 - z",
      "i*z^2 + (1+i)",
      "(2+3*i)*z - i/z",
      "(z-i)/(z+i)",
      "z^0",
      "((z))",
      "2(z+1)",
      "2z^2*3",
      "z/z/z",
      "z-z-z",
      "(z-1)^3/(z+1)^2",
      "1/(1/z)",
      "  z ^ 2 -   2 ",
      "3/4*z^2+3/4*z",
      "16*z^4-16*z^2+2",
      "4*z^4-16*z^2+14",
      "-1/2*i*z",
      "((z^2-1)/(z^2+1))^2",
  };
  return corpus;
}

}  // namespace ratsemi::testing
