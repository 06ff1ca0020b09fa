__all__ = ['groups', 'fourier', 'census', 'checks', 'config', 'report',
           'sweep', 'enums', 'structs', 'errors']
