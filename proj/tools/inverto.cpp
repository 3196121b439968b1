#include <iostream>

#include "inverto/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto result = inverto::cli::run(args);
    if (result.status != inverto::cli::kOk) {
        std::cerr << "inverto: " << result.text << '\n';
        return result.status;
    }
    if (result.want_json)
        std::cout << result.json.dump(2) << '\n';
    else
        std::cout << result.text;
    return 0;
}
