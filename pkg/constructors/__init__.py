# Group constructors
