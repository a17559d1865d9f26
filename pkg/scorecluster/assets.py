# Bar fills per performance band, keyed by PerformanceBand name
BAND_COLOURS = {
    'EXCELLENT': '#1b7837',
    'VERY_GOOD': '#5aae61',
    'GOOD': '#a6dba0',
    'VERY_FAIR': '#fdb863',
    'FAIR': '#e08214',
    'POOR': '#b2182b',
}
AXIS_COLOUR = '#333333'
GRID_COLOUR = '#dddddd'
FONT_FAMILY = 'Helvetica, Arial, sans-serif'

# Plot margins in pixels (left, right, top, bottom)
CHART_MARGINS = (64, 24, 48, 64)
BAR_GAP_RATIO = 0.3
