#pragma once

#include "eureka/alphabet.hpp"
#include "eureka/cascade.hpp"
#include "eureka/drumc.hpp"
#include "eureka/error.hpp"
#include "eureka/lexicon.hpp"
#include "eureka/mechanism.hpp"
#include "eureka/meter.hpp"
#include "eureka/peter.hpp"
#include "eureka/random.hpp"
#include "eureka/trace.hpp"
#include "eureka/validate.hpp"
