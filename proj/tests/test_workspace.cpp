#include <catch2/catch_amalgamated.hpp>
#include <doihopf/doihopf.hpp>
