# Vanishing class sizes, classification and invariant checks
