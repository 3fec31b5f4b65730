# Worker tests module
