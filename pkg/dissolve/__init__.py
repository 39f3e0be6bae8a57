# This is a hack to allow running headless e.g. Jenkins
import os

if not os.environ.get('DISPLAY'):
    import matplotlib

    matplotlib.use('Agg')

from dissolve.model.instance import Graph, CompleteGraph
from dissolve.model.instance import Instance
from dissolve.model.instance import DerivedCounts, derivedCounts

from dissolve.model.dissolution import Dissolution, BiasedDissolution
from dissolve.model.dissolution import UsedEdgeSet, usedEdgeSet
from dissolve.model.dissolution import Verdict
from dissolve.model.dissolution import verifyDissolution, verifyBiasedDissolution

from dissolve.flow.flownetwork import FlowNetwork, FlowResult
from dissolve.flow.flownetwork import maxFlow, minCut
from dissolve.flow.rolenetwork import RoleNetwork
from dissolve.flow.rolenetwork import buildRoleNetwork, extractBiasedSolution
from dissolve.flow.rolenetwork import embedSolutionAsFlow
from dissolve.flow.rolenetwork import buildDissolutionNetwork, extractDissolution

from dissolve.tools.matching import WeightedGraph, Matching
from dissolve.tools.matching import perfectMatching, maxWeightPerfectMatching

from dissolve.solvers.outcome import RoleAssignment, SolveOutcome
from dissolve.solvers.fixedroles import solveFixedRoles
from dissolve.solvers.exact import solveExact
from dissolve.solvers.specialcases import solveEqualSizes, solveBiased11, solveClique
from dissolve.solvers.transforms import mirrorInstance, mirrorSolution
from dissolve.solvers.transforms import starPartitionToDissolution
from dissolve.solvers.transforms import dissolutionToStarPartition
from dissolve.solvers.dispatch import solve

from dissolve.tools.generators.bezout import BezoutPair, bezoutNonneg
from dissolve.tools.generators.xcreduction import XCInstance, randomXCInstance
from dissolve.tools.generators.xcreduction import generateDissolutionHardness
from dissolve.tools.generators.xcreduction import generateBiasedHardness
from dissolve.tools.generators.twofactor import biased22Instance
from dissolve.tools.generators.twofactor import twoFactorToBiased22, biased22ToTwoFactor
from dissolve.tools.generators.randominstances import generateRandom

from dissolve.tools.oracle import bruteForceDissolution, bruteForceBiased
from dissolve.tools.oracle import bruteForceFixedRoles, bruteForceStarPartition

from dissolve.tools.plottools.dissolutionplot import plotDissolution
