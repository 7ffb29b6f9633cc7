#include "ramiflow/cli.hpp"

int main(int argc, char** argv) {
  return ramiflow::cli::run({argv + 1, argv + argc});
}
