#pragma once

// Umbrella header.

#include "obr/accommodating.hpp"
#include "obr/adversary.hpp"
#include "obr/corpus.hpp"
#include "obr/harness.hpp"
#include "obr/io.hpp"
#include "obr/model.hpp"
#include "obr/online.hpp"
#include "obr/oracle.hpp"
#include "obr/problem.hpp"
#include "obr/rational.hpp"
#include "obr/reference.hpp"
#include "obr/verify.hpp"
