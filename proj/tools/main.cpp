#include "xychain/cli.hpp"

int main(int argc, char** argv) {
    return xychain::dispatch(argc, argv);
}
