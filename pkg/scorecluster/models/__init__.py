from scorecluster.models.band import PerformanceBand
from scorecluster.models.clustering import ClusterModel, EmptyClusterPolicy, InitStrategy, KMeansConfig
from scorecluster.models.matrix import ScoreMatrix
from scorecluster.models.report import AnalysisReport, ClusterPerformance, DatasetStats, KResult

__all__ = [
    'AnalysisReport',
    'ClusterModel',
    'ClusterPerformance',
    'DatasetStats',
    'EmptyClusterPolicy',
    'InitStrategy',
    'KMeansConfig',
    'KResult',
    'PerformanceBand',
    'ScoreMatrix',
]
