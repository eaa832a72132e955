#pragma once
#include <ostream>
#include <string>
#include <vector>
namespace acaa::cli {
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);
}
