// Stand-in external agent for the CLI tests.
//   helper_agent          answer every message with a no-op for its mode
//   helper_agent bad      answer with something that is not an action
//   helper_agent quit     exit without answering
//   helper_agent wrong    answer with an action of another mode
#include <iostream>
#include <string>

#include "json.hpp"

int main(int argc, char** argv) {
  const std::string behavior = argc > 1 ? argv[1] : "noop";
  if (behavior == "quit") return 0;
  std::string line;
  while (std::getline(std::cin, line)) {
    const auto msg = nlohmann::json::parse(line);
    const std::string mode = msg.at("mode").get<std::string>();
    if (behavior == "bad") {
      std::cout << "{\"mode\": 7}" << std::endl;
    } else if (behavior == "wrong") {
      std::cout << (mode == "discrete" ? R"({"mode":"human"})" : R"({"mode":"discrete","op":"noop"})") << std::endl;
    } else if (mode == "discrete") {
      std::cout << R"({"mode":"discrete","op":"noop"})" << std::endl;
    } else {
      std::cout << "{\"mode\":\"" << mode << "\"}" << std::endl;
    }
  }
  return 0;
}
