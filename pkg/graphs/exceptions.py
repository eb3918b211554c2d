class GraphError(Exception):
    pass


class GraphArgumentError(GraphError, ValueError):
    pass


class VertexCapExceeded(GraphArgumentError):
    def __init__(self, order, cap):
        self.order = order
        self.cap = cap
        super().__init__(f'Graph of order {order} exceeds the vertex cap of {cap}')


class GraphParseError(GraphError, ValueError):
    def __init__(self, message, line=None, position=None):
        self.line = line
        self.position = position
        location = []
        if line is not None:
            location.append(f'line {line}')
        if position is not None:
            location.append(f'position {position}')
        suffix = f' ({", ".join(location)})' if location else ''
        super().__init__(f'{message}{suffix}')
