#pragma once

#include "implab/bal.hpp"
#include "implab/balance.hpp"
#include "implab/canonical.hpp"
#include "implab/enumeration.hpp"
#include "implab/fixtures.hpp"
#include "implab/graph.hpp"
#include "implab/impropriety.hpp"
#include "implab/interval_model.hpp"
#include "implab/io.hpp"
#include "implab/local_profile.hpp"
#include "implab/parallel.hpp"
#include "implab/recognition.hpp"
#include "implab/verify.hpp"
