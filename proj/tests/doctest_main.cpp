// doctest_main.cpp
// Test runner entry point shared by the unit and property suites.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
